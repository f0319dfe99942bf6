#pragma once

#include <string>
#include <vector>

#include "redmat/algebra.hpp"

namespace redmat {

/// Parsed form of a `.quiver` file.
///
/// Line-oriented, UTF-8, `#` comments. Sections:
///   [vertices]   one vertex per line: `name` or `name(2)` for a matrix-
///                weighted vertex
///   [arrows]     `name: src -> tgt`
///   [relations]  `c1*p1 + c2*p2 = rhs` with paths as `*`-separated arrow
///                names in composition order (`b*a` applies a first); rhs
///                is 0 or another combination
///   [over.vertices] / [over.arrows] / [over.relations]
///                optional second algebra for an overring bundle
///   [ideal]      generator names (vertices and/or arrows of the base
///                algebra), comma/space separated
///   [embedding]  `gen -> expr` mapping base generators to elements of the
///                over algebra; terms are paths with an optional
///                coordinate suffix `[r,c]` (1-based), e.g. `b[1,2]`,
///                and vertex names denote idempotents.
struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;

  bool has_over = false;
  Quiver over_quiver;
  std::vector<Relation> over_relations;
  std::vector<std::string> ideal_generators;
  // raw (lhs, rhs) embedding lines, resolved against the built algebras
  std::vector<std::pair<std::string, std::string>> embedding_lines;
};

Presentation parse_quiver_file(const std::string& text, Field field);

/// Algebra of the base sections. Spec name: parse_presentation.
Algebra::Ptr parse_presentation(const std::string& text, Field field, int length_bound = 32);

std::string serialize_presentation(const Presentation& p);
Presentation presentation_of(const Algebra& a);

/// Parses an element expression ("2*b[1,2] + c*a - e_v") in an algebra.
Mat parse_element(const Algebra& a, const std::string& expr);

}  // namespace redmat
