#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "redmat/field.hpp"

namespace redmat {

/// Finite quiver. Vertices carry a matrix weight ("size"): size 1 is an
/// ordinary vertex, size s > 1 stands for a full s x s matrix block at that
/// vertex (the non-basic / fat-vertex case).
class Quiver {
 public:
  struct Vertex {
    std::string id;
    int size = 1;
  };
  struct Arrow {
    std::string id;
    int src = 0;
    int tgt = 0;
  };

  int add_vertex(const std::string& id, int size = 1);
  int add_arrow(const std::string& id, const std::string& src, const std::string& tgt);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const Vertex& vertex(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int vertex_index(const std::string& id) const;  // KeyError if unknown
  int arrow_index(const std::string& id) const;
  std::optional<int> find_vertex(const std::string& id) const;
  std::optional<int> find_arrow(const std::string& id) const;

  std::vector<int> arrows_from(int v) const;
  std::vector<int> arrows_into(int v) const;

  /// Same vertices (and sizes), all arrows reversed; arrow ids preserved.
  Quiver reversed() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, int> vindex_;
  std::unordered_map<std::string, int> aindex_;
};

/// A path in a quiver. Arrows are stored in application order: arrows[0]
/// acts first. Rendered in composition order ("b*a" applies a, then b).
struct Path {
  int src = 0;
  int tgt = 0;
  std::vector<int> arrows;

  static Path trivial(int v) { return Path{v, v, {}}; }
  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }

  /// later o earlier (apply `earlier` first); nullopt when not composable.
  static std::optional<Path> compose(const Path& later, const Path& earlier);

  std::vector<int> key() const;  // (src, arrows...) -- unique
  bool operator==(const Path& o) const { return src == o.src && arrows == o.arrows; }
  std::string str(const Quiver& q) const;
};

/// Linear combination of parallel paths, all with the same source and
/// target; each path has length >= 2 (admissibility).
struct Relation {
  std::vector<std::pair<Scalar, Path>> terms;

  void validate(const Quiver& q) const;  // AdmissibilityError on violation
  int src() const { return terms.at(0).second.src; }
  int tgt() const { return terms.at(0).second.tgt; }
  bool homogeneous() const;
  std::string str(const Quiver& q) const;
};

}  // namespace redmat
