#pragma once

#include "redmat/presentation.hpp"

namespace redmat {

struct SemisimpleBlock {
  int vertex;  // vertex index in the parent algebra
  int size;    // matrix block size
};

/// Wedderburn data of a semisimple algebra: one matrix block per vertex.
struct SemisimpleDecomp {
  std::vector<SemisimpleBlock> blocks;
  /// basis indices of the matrix units of each block, row-major
  std::vector<std::vector<std::size_t>> units;
};

/// Throws NotSemisimpleError when the radical is nonzero.
SemisimpleDecomp wedderburn(const Algebra& a);

/// A verified embedding A <= A~ with rad A = rad A~, together with a
/// two-sided A~-ideal I inside A containing the radical, and the induced
/// semisimple quotients A/I -> A~/I with their block-diagonal embedding
/// data.
class OverringData {
 public:
  Algebra::Ptr sub;
  Algebra::Ptr over;
  Mat inclusion;   // dim_over x dim_sub, column i = image of sub basis i
  Mat ideal_sub;   // columns: basis of I in sub coordinates
  Mat ideal_over;  // the same basis in over coordinates

  std::vector<int> sub_surviving;   // sub vertices with block outside I
  std::vector<int> over_surviving;  // over vertices with block outside I
  Algebra::Ptr sub_quotient;        // A/I (no arrows)
  Algebra::Ptr over_quotient;       // A~/I (no arrows)
  std::vector<int> sub_q_of_vertex;   // original vertex -> quotient vertex (-1 dead)
  std::vector<int> over_q_of_vertex;

  /// Per surviving sub primitive idempotent (vertex, row): the over
  /// primitive idempotents it maps to modulo I.
  struct PrimImage {
    int sub_vertex;
    int sub_row;
    std::vector<std::pair<int, int>> over_prims;  // (over vertex, row)
  };
  std::vector<PrimImage> embedding_data;

  Mat include_elt(const Mat& x) const { return inclusion * x; }

  /// All invariants checked computationally; throws OverringError naming
  /// the violated condition.
  static OverringData validate(Algebra::Ptr sub, Algebra::Ptr over, const Mat& inclusion,
                               const Mat& ideal_gens_sub);

  /// Builds an overring from a parsed `.quiver` bundle with [over.*],
  /// [ideal], [embedding] sections.
  static OverringData from_presentation(const Presentation& p, Field f, int length_bound = 32);

  /// Trivial overring A = A~ with I = rad(A).
  static OverringData trivial(Algebra::Ptr a);
};

}  // namespace redmat
