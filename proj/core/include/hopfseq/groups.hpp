#pragma once

#include <string>
#include <vector>

namespace hopfseq {

/// A finite group by Cayley table, table[g][h] = g*h (left-to-right product;
/// permutation composition applies the right factor first).
struct Group {
  std::string name;
  std::vector<std::string> element_names;
  std::vector<std::vector<int>> table;
  int identity = 0;

  int order() const { return static_cast<int>(table.size()); }
  int mul(int g, int h) const { return table[g][h]; }
  int inverse(int g) const;
  int element_order(int g) const;
  int exponent() const;
  bool is_abelian() const;

  static Group cyclic(int n);
  static Group symmetric3();
  static Group dihedral4();    // order 8
  static Group quaternion8();  // order 8
  static Group klein4();       // Z/2 x Z/2
};

/// Lookup by the names used in the CLI: Z1..Z12, S3, D4, Q8, V4 (= Z2xZ2).
Group named_group(const std::string& name);

}  // namespace hopfseq
