#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfseq/subspace.hpp"
#include "hopfseq/tensor.hpp"

namespace hopfseq {

class HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// One named pass/fail check with an optional witness description.
struct CheckItem {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct Certificate {
  std::vector<CheckItem> items;
  void add(std::string name, bool pass, std::string witness = "");
  bool all_pass() const;
  std::string first_failure() const;
};

/// Index/coefficient pairs sorted by index. Tensor-square entries use the
/// global row-major flattening.
using SparseVec = std::vector<std::pair<int, Scalar>>;

void sparse_add(SparseVec& acc, int idx, const Scalar& c);
SparseVec sparse_normalize(std::map<int, Scalar>&& acc);
Vec sparse_to_dense(const SparseVec& v, const Field* f, std::size_t n);

/// A finite-dimensional Hopf algebra presented by structure constants on a
/// fixed basis e_0..e_{n-1}:
///   mult    (i, j, k, c): e_i e_j += c e_k
///   comult  (i, j, k, c): Delta(e_i) += c e_j (x) e_k
///   antipode (i, j, c):   S(e_i) += c e_j
/// Construction checks well-formedness and inverts the antipode matrix; the
/// full axiom suite lives in verify_axioms.
class HopfAlgebra : public std::enable_shared_from_this<HopfAlgebra> {
 public:
  struct Data {
    const Field* field = nullptr;
    std::vector<std::string> labels;
    Vec unit;
    Vec counit;
    std::vector<std::tuple<int, int, int, Scalar>> mult;
    std::vector<std::tuple<int, int, int, Scalar>> comult;
    std::vector<std::tuple<int, int, Scalar>> antipode;
  };
  static HopfPtr make(Data d);

  int dim() const { return n_; }
  const Field* field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  const Vec& unit_vec() const { return unit_; }
  const Vec& counit_vec() const { return counit_; }
  const SparseVec& mult_sparse(int i, int j) const { return mult_[i * n_ + j]; }
  /// Delta(e_i) over flattened tensor-square indices.
  const SparseVec& comult_sparse(int i) const { return comult_[i]; }
  const Matrix& antipode_matrix() const { return antipode_; }
  const Matrix& antipode_inverse_matrix() const { return antipode_inv_; }

  Vec basis_vec(int i) const;

  // Coefficient-vector operations.
  Vec mul(std::span<const Scalar> a, std::span<const Scalar> b) const;
  Scalar counit_of(std::span<const Scalar> a) const;
  Vec antipode_of(std::span<const Scalar> a) const;
  Vec antipode_inv_of(std::span<const Scalar> a) const;

  /// Iterated coproduct with the stated number of output legs (1 -> a,
  /// 2 -> Delta a, 3 -> (Delta (x) id)Delta a, ...), dense of size n^legs.
  Vec sweedler(std::span<const Scalar> a, int legs) const;
  Vec comult_of(std::span<const Scalar> a) const { return sweedler(a, 2); }
  Vec comult_op_of(std::span<const Scalar> a) const;

  // Tensor-square algebra (dense n^2 vectors).
  Vec t2_unit() const;
  Vec t2_mul(std::span<const Scalar> x, std::span<const Scalar> y) const;
  std::optional<Vec> t2_inverse(std::span<const Scalar> x) const;
  Vec t2_flip(std::span<const Scalar> x) const;
  Vec t2_apply_pair(const Matrix& f, const Matrix& g, std::span<const Scalar> x) const;

  /// Left/right multiplication operators as n x n matrices.
  Matrix left_mult_matrix(std::span<const Scalar> v) const;
  Matrix right_mult_matrix(std::span<const Scalar> v) const;

  /// Lazily verified flag: set by verify_axioms via require_verified.
  enum class VerifyState : int { unknown = 0, ok = 1, failed = -1 };
  VerifyState verify_state() const { return state_.load(); }
  void set_verify_state(VerifyState s) const { state_.store(s); }

 private:
  HopfAlgebra() = default;
  int n_ = 0;
  const Field* field_ = nullptr;
  std::vector<std::string> labels_;
  Vec unit_;
  Vec counit_;
  std::vector<SparseVec> mult_;    // n*n entries
  std::vector<SparseVec> comult_;  // n entries, flattened pairs
  Matrix antipode_{nullptr, 0, 0};
  Matrix antipode_inv_{nullptr, 0, 0};
  mutable std::atomic<VerifyState> state_{VerifyState::unknown};
};

/// An element tied to its algebra; coefficient vector of length dim.
class Element {
 public:
  Element(HopfPtr h, Vec v);
  static Element basis(HopfPtr h, int i);
  static Element unit(HopfPtr h);
  const Vec& vec() const { return v_; }
  const HopfPtr& algebra() const { return h_; }
  Element operator*(const Element& o) const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element scaled_by(const Scalar& c) const;
  bool operator==(const Element& o) const;

 private:
  HopfPtr h_;
  Vec v_;
};

/// An element of A (x) A as a dense flattened grid.
class Tensor2 {
 public:
  Tensor2(HopfPtr h, Vec v);
  static Tensor2 of(const Element& a, const Element& b);  // a (x) b
  const Vec& vec() const { return v_; }
  const HopfPtr& algebra() const { return h_; }
  Tensor2 operator*(const Tensor2& o) const;
  Tensor2 operator+(const Tensor2& o) const;
  Tensor2 operator-(const Tensor2& o) const;
  bool operator==(const Tensor2& o) const;

 private:
  HopfPtr h_;
  Vec v_;
};

// ----- Axiom verification (hopf-core) -----

struct AxiomReport {
  Certificate cert;
  bool pass() const { return cert.all_pass(); }
};

/// Runs the full Hopf-axiom suite: unit/associativity, counit/coassociativity,
/// bialgebra compatibility, the antipode axiom, and antipode invertibility.
/// Failures carry witness basis indices.
AxiomReport verify_axioms(const HopfAlgebra& h);

/// Runs verify_axioms once per algebra and caches the outcome; throws
/// std::runtime_error when verification fails.
void require_verified(const HopfAlgebra& h);

// ----- Convolution algebra on endomorphisms -----

/// Product of sparse tensor-square elements in A (x) A.
SparseVec sparse_t2_mul(const HopfAlgebra& h, const SparseVec& x, const SparseVec& y);

/// (f * g)(x) = f(x_(1)) g(x_(2)) on n x n matrices.
Matrix convolution(const HopfAlgebra& h, const Matrix& f, const Matrix& g);

/// Solves f * g = unit.counit = g * f; nullopt when the system is singular.
std::optional<Matrix> convolution_inverse(const HopfAlgebra& h, const Matrix& f);

// ----- W operator (multiplicative shift) -----

/// W(a (x) a') = a_(1) (x) a_(2) a', with inverse a_(1) (x) S(a_(2)) a'.
/// Certification checks both composites and the braid-type identity
/// W23 W12 = W12 W13 W23 on all basis triples.
struct WOperator {
  HopfPtr algebra;
  std::vector<SparseVec> columns;      // W(e_a (x) e_b) by flattened column
  std::vector<SparseVec> inv_columns;  // W^{-1} columns
  Certificate cert;
  Matrix dense() const;
  Matrix dense_inverse() const;
};

WOperator w_operator(HopfPtr h);

}  // namespace hopfseq
