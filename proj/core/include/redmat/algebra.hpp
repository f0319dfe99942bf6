#pragma once

#include <map>
#include <memory>

#include "redmat/mat.hpp"
#include "redmat/quiver.hpp"

namespace redmat {

/// Finite-dimensional quotient of the (matrix-weighted) path algebra of a
/// quiver by an admissible ideal of relations.
///
/// A vertex of size s carries an s x s matrix block; the basis consists of
/// triples (residue path p : v -> w, row in size(w), col in size(v)), with
/// (p, r, c) * (q, r', c') = delta_{c r'} (p o q, r, c'). Elements are
/// coefficient columns over this basis.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  using Ptr = std::shared_ptr<const Algebra>;
  using PathCombo = std::vector<std::pair<int, Scalar>>;  // (residue path id, coeff)

  struct BasisElt {
    int path;
    int row;
    int col;
  };

  /// Computes the residue-path basis and multiplication data. Throws
  /// AdmissibilityError for malformed relations and FinitenessError when
  /// path enumeration reaches `length_bound` without the quotient
  /// stabilizing.
  static Ptr make(Quiver q, std::vector<Relation> rels, Field f, int length_bound = 32);

  const Quiver& quiver() const { return quiver_; }
  Field field() const { return field_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int vsize(int v) const { return quiver_.vertex(v).size; }

  std::size_t num_paths() const { return residue_paths_.size(); }
  const Path& path(int i) const { return residue_paths_.at(i); }
  /// Residue path ids from src to tgt.
  const std::vector<int>& paths_between(int src, int tgt) const;
  /// Smallest N such that every path of length >= N is zero in the quotient.
  int nilpotency() const { return nilpotency_; }

  std::size_t dim() const { return basis_.size(); }
  const BasisElt& basis(std::size_t i) const { return basis_.at(i); }
  std::size_t basis_index(int path, int row, int col) const;

  Mat zero_elt() const { return Mat::zeros(field_, dim(), 1); }
  Mat unit() const;
  Mat idempotent(int v) const;
  Mat prim_idempotent(int v, int r) const;
  Mat elt_of_basis(std::size_t i) const;
  Mat elt_of_path(int path_id) const;  // coordinates (0,0)
  Mat mul(const Mat& x, const Mat& y) const;

  /// Normal form of an arbitrary composable path; empty combo = zero.
  PathCombo reduce_path(const Path& p) const;
  /// residue(p o q), p applied after q; empty combo when zero or not composable.
  const PathCombo& mul_paths(int p, int q) const;
  /// Sweeps (xy)z = x(yz) over all basis triples; throws on violation.
  void check_associativity() const;

  /// Basis indices of the Jacobson radical (= positive-length residue paths).
  std::vector<std::size_t> radical_basis() const;
  bool is_semisimple() const;

  /// Two-sided ideal closure of the span of the given columns.
  Mat ideal_closure(const Mat& gens) const;

  /// Opposite algebra (arrows and relations reversed).
  Ptr op() const;
  /// Transports an element along the canonical anti-isomorphism to op().
  Mat op_elt(const Mat& x, const Algebra& opalg) const;

  std::string describe() const;

 private:
  Algebra(Quiver q, std::vector<Relation> rels, Field f)
      : quiver_(std::move(q)), relations_(std::move(rels)), field_(f) {}
  void build(int length_bound);

  Quiver quiver_;
  std::vector<Relation> relations_;
  Field field_;

  std::vector<Path> residue_paths_;
  std::map<std::vector<int>, int> enum_index_;        // all enumerated paths
  std::vector<int> enum_to_residue_;                  // -1 for pivot paths
  std::vector<PathCombo> enum_rewrite_;               // for pivots
  std::vector<std::vector<std::vector<int>>> paths_by_st_;  // [src][tgt]
  int nilpotency_ = 0;

  std::vector<BasisElt> basis_;
  std::vector<int> basis_offset_;  // per residue path
  std::map<std::pair<int, int>, PathCombo> path_mult_;
  PathCombo empty_combo_;
};

}  // namespace redmat
