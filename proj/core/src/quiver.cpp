#include "redmat/quiver.hpp"

#include <sstream>

#include "redmat/errors.hpp"

namespace redmat {

int Quiver::add_vertex(const std::string& id, int size) {
  if (id.empty()) throw ParseError("empty vertex id");
  if (vindex_.count(id)) throw ParseError("duplicate vertex id '" + id + "'");
  if (size < 1) throw ParseError("vertex size must be >= 1 for '" + id + "'");
  vindex_[id] = static_cast<int>(vertices_.size());
  vertices_.push_back({id, size});
  return vindex_[id];
}

int Quiver::add_arrow(const std::string& id, const std::string& src, const std::string& tgt) {
  if (id.empty()) throw ParseError("empty arrow id");
  if (aindex_.count(id) || vindex_.count(id))
    throw ParseError("duplicate identifier '" + id + "'");
  int s = vertex_index(src);
  int t = vertex_index(tgt);
  aindex_[id] = static_cast<int>(arrows_.size());
  arrows_.push_back({id, s, t});
  return aindex_[id];
}

int Quiver::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) throw KeyError("unknown vertex '" + id + "'");
  return it->second;
}

int Quiver::arrow_index(const std::string& id) const {
  auto it = aindex_.find(id);
  if (it == aindex_.end()) throw KeyError("unknown arrow '" + id + "'");
  return it->second;
}

std::optional<int> Quiver::find_vertex(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::find_arrow(const std::string& id) const {
  auto it = aindex_.find(id);
  if (it == aindex_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].src == v) out.push_back(static_cast<int>(a));
  return out;
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].tgt == v) out.push_back(static_cast<int>(a));
  return out;
}

Quiver Quiver::reversed() const {
  Quiver q;
  for (const auto& v : vertices_) q.add_vertex(v.id, v.size);
  for (const auto& a : arrows_)
    q.add_arrow(a.id, vertices_[a.tgt].id, vertices_[a.src].id);
  return q;
}

std::optional<Path> Path::compose(const Path& later, const Path& earlier) {
  if (later.src != earlier.tgt) return std::nullopt;
  Path p;
  p.src = earlier.src;
  p.tgt = later.tgt;
  p.arrows = earlier.arrows;
  p.arrows.insert(p.arrows.end(), later.arrows.begin(), later.arrows.end());
  return p;
}

std::vector<int> Path::key() const {
  std::vector<int> k;
  k.reserve(arrows.size() + 1);
  k.push_back(src);
  k.insert(k.end(), arrows.begin(), arrows.end());
  return k;
}

std::string Path::str(const Quiver& q) const {
  if (arrows.empty()) return "e_" + q.vertex(src).id;
  std::ostringstream os;
  for (std::size_t i = arrows.size(); i-- > 0;) {
    os << q.arrow(arrows[i]).id;
    if (i > 0) os << "*";
  }
  return os.str();
}

void Relation::validate(const Quiver& q) const {
  if (terms.empty()) throw AdmissibilityError("empty relation");
  int s = -1, t = -1;
  for (const auto& [c, p] : terms) {
    if (p.length() < 2)
      throw AdmissibilityError("relation path '" + p.str(q) + "' has length < 2");
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
      const auto& a = q.arrow(p.arrows[i]);
      int need_src = (i == 0) ? p.src : q.arrow(p.arrows[i - 1]).tgt;
      if (a.src != need_src) throw AdmissibilityError("non-composable path in relation");
    }
    if (q.arrow(p.arrows.back()).tgt != p.tgt)
      throw AdmissibilityError("path target mismatch in relation");
    if (s == -1) {
      s = p.src;
      t = p.tgt;
    } else if (p.src != s || p.tgt != t) {
      throw AdmissibilityError("relation paths are not parallel");
    }
    if (c.is_zero()) throw AdmissibilityError("zero coefficient in relation");
  }
}

bool Relation::homogeneous() const {
  int len = terms.at(0).second.length();
  for (const auto& [c, p] : terms)
    if (p.length() != len) return false;
  return true;
}

std::string Relation::str(const Quiver& q) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, p] : terms) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c.str() << "*";
    os << p.str(q);
  }
  os << " = 0";
  return os.str();
}

}  // namespace redmat
