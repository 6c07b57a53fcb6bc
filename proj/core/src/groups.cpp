#include "hopfseq/groups.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace hopfseq {

int Group::inverse(int g) const {
  for (int h = 0; h < order(); ++h)
    if (mul(g, h) == identity) return h;
  throw std::logic_error("Group::inverse: no inverse found (not a group table)");
}

int Group::element_order(int g) const {
  int x = g, k = 1;
  while (x != identity) {
    x = mul(x, g);
    ++k;
    if (k > order()) throw std::logic_error("Group::element_order: table is not a group");
  }
  return k;
}

int Group::exponent() const {
  long long e = 1;
  for (int g = 0; g < order(); ++g) e = std::lcm(e, static_cast<long long>(element_order(g)));
  return static_cast<int>(e);
}

bool Group::is_abelian() const {
  for (int g = 0; g < order(); ++g)
    for (int h = 0; h < g; ++h)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

Group Group::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("Group::cyclic: order must be >= 1");
  Group g;
  g.name = "Z" + std::to_string(n);
  g.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    g.element_names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  }
  g.identity = 0;
  return g;
}

Group Group::symmetric3() {
  // Permutations of {1,2,3}; composition applies the right factor first.
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
      {1, 2, 0},  // (123): 1->2, 2->3, 3->1
      {2, 0, 1},  // (132)
  }};
  Group g;
  g.name = "S3";
  g.element_names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  g.table.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      int idx = -1;
      for (int c = 0; c < 6; ++c)
        if (perms[c] == comp) idx = c;
      g.table[a][b] = idx;
    }
  g.identity = 0;
  return g;
}

Group Group::dihedral4() {
  // r^a s^b with r^4 = s^2 = e, s r = r^{-1} s; index = b*4 + a.
  Group g;
  g.name = "D4";
  g.table.assign(8, std::vector<int>(8));
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 4; ++a) {
      std::string nm = (a == 0 && b == 0) ? "e" : "";
      if (a == 1) nm = "r";
      if (a > 1) nm = "r^" + std::to_string(a);
      if (b) nm += "s";
      if (nm.empty()) nm = "e";
      g.element_names.push_back(nm);
    }
  auto idx = [](int a, int b) { return b * 4 + a; };
  for (int b1 = 0; b1 < 2; ++b1)
    for (int a1 = 0; a1 < 4; ++a1)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int a2 = 0; a2 < 4; ++a2) {
          int a = ((a1 + (b1 ? 4 - a2 : a2)) % 4 + 4) % 4;
          int b = (b1 + b2) % 2;
          g.table[idx(a1, b1)][idx(a2, b2)] = idx(a, b);
        }
  g.identity = 0;
  return g;
}

Group Group::quaternion8() {
  // Units {±1, ±i, ±j, ±k}; index = 2*axis + sign, axes 1,i,j,k.
  Group g;
  g.name = "Q8";
  g.element_names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // axis products: (axis, axis) -> (sign, axis)
  auto axis_mul = [](int x, int y) -> std::pair<int, int> {
    if (x == 0) return {0, y};
    if (y == 0) return {0, x};
    if (x == y) return {1, 0};  // i^2 = j^2 = k^2 = -1
    // cyclic: i*j=k, j*k=i, k*i=j; reversed order picks up a sign
    if ((x == 1 && y == 2)) return {0, 3};
    if ((x == 2 && y == 3)) return {0, 1};
    if ((x == 3 && y == 1)) return {0, 2};
    if ((x == 2 && y == 1)) return {1, 3};
    if ((x == 3 && y == 2)) return {1, 1};
    if ((x == 1 && y == 3)) return {1, 2};
    throw std::logic_error("quaternion axis product");
  };
  g.table.assign(8, std::vector<int>(8));
  for (int x = 0; x < 4; ++x)
    for (int sx = 0; sx < 2; ++sx)
      for (int y = 0; y < 4; ++y)
        for (int sy = 0; sy < 2; ++sy) {
          auto [s, z] = axis_mul(x, y);
          int sign = (sx + sy + s) % 2;
          g.table[2 * x + sx][2 * y + sy] = 2 * z + sign;
        }
  g.identity = 0;
  return g;
}

Group Group::klein4() {
  Group g;
  g.name = "V4";
  g.element_names = {"e", "a", "b", "ab"};
  g.table.assign(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.table[i][j] = i ^ j;
  g.identity = 0;
  return g;
}

Group named_group(const std::string& name) {
  if (name == "S3") return Group::symmetric3();
  if (name == "D4") return Group::dihedral4();
  if (name == "Q8") return Group::quaternion8();
  if (name == "V4" || name == "Z2xZ2") return Group::klein4();
  if (name.size() >= 2 && name[0] == 'Z') {
    int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 24) return Group::cyclic(n);
  }
  throw std::invalid_argument("named_group: unknown group '" + name + "'");
}

}  // namespace hopfseq
