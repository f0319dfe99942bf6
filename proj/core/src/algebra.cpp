#include "redmat/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace redmat {

namespace {
constexpr std::size_t kMaxEnumeratedPaths = 50000;
}

Algebra::Ptr Algebra::make(Quiver q, std::vector<Relation> rels, Field f, int length_bound) {
  for (auto& r : rels) {
    r.validate(q);
    for (auto& [c, p] : r.terms)
      if (c.field() != f) throw ArityError("relation coefficient field mismatch");
  }
  auto alg = std::shared_ptr<Algebra>(new Algebra(std::move(q), std::move(rels), f));
  alg->build(length_bound);
  return alg;
}

void Algebra::build(int length_bound) {
  const std::size_t nv = quiver_.num_vertices();
  bool homogeneous = true;
  int max_rel_len = 2;
  for (const auto& r : relations_) {
    if (!r.homogeneous()) homogeneous = false;
    for (const auto& [c, p] : r.terms) max_rel_len = std::max(max_rel_len, p.length());
  }

  // Paths enumerated level by level; enum order is construction order.
  std::vector<Path> enumerated;
  std::vector<std::vector<int>> by_level;
  auto add_path = [&](const Path& p) {
    int idx = static_cast<int>(enumerated.size());
    enum_index_[p.key()] = idx;
    enumerated.push_back(p);
    while (by_level.size() <= static_cast<std::size_t>(p.length())) by_level.emplace_back();
    by_level[p.length()].push_back(idx);
    if (enumerated.size() > kMaxEnumeratedPaths)
      throw FinitenessError("path enumeration exceeded " + std::to_string(kMaxEnumeratedPaths));
  };
  for (std::size_t v = 0; v < nv; ++v) add_path(Path::trivial(static_cast<int>(v)));

  // enum idx -> (residue id | -1 with rewrite over residue ids)
  std::vector<int> to_residue;
  std::vector<PathCombo> rewrite;
  auto grow_maps = [&]() {
    to_residue.resize(enumerated.size(), -2);
    rewrite.resize(enumerated.size());
  };

  auto mark_residue = [&](int e) {
    to_residue[e] = static_cast<int>(residue_paths_.size());
    residue_paths_.push_back(enumerated[e]);
  };

  grow_maps();
  for (std::size_t v = 0; v < nv; ++v) mark_residue(static_cast<int>(v));

  int stop_level = -1;
  for (int level = 1; level <= length_bound; ++level) {
    // Extend paths of length level-1 by arrows applied afterwards.
    std::size_t before = enumerated.size();
    if (static_cast<std::size_t>(level - 1) < by_level.size()) {
      auto prev = by_level[level - 1];
      for (int e : prev) {
        Path base = enumerated[e];
        for (std::size_t a = 0; a < quiver_.num_arrows(); ++a) {
          if (quiver_.arrow(static_cast<int>(a)).src != base.tgt) continue;
          Path ext = base;
          ext.arrows.push_back(static_cast<int>(a));
          ext.tgt = quiver_.arrow(static_cast<int>(a)).tgt;
          add_path(ext);
        }
      }
    }
    grow_maps();
    std::vector<int> level_paths =
        static_cast<std::size_t>(level) < by_level.size() ? by_level[level] : std::vector<int>{};

    if (homogeneous) {
      // Graded piece of the ideal at this level: u o r o v with
      // |u| + deg(r) + |v| = level.
      std::vector<std::vector<Scalar>> rows;
      std::map<int, int> col_of_enum;
      for (std::size_t i = 0; i < level_paths.size(); ++i) col_of_enum[level_paths[i]] = int(i);
      for (const auto& rel : relations_) {
        int d = rel.terms[0].second.length();
        for (int lu = 0; lu + d <= level; ++lu) {
          int lv = level - d - lu;
          if (lv < 0 || static_cast<std::size_t>(lu) >= by_level.size() ||
              static_cast<std::size_t>(lv) >= by_level.size())
            continue;
          for (int ue : by_level[lu]) {
            if (enumerated[ue].src != rel.tgt()) continue;
            for (int ve : by_level[lv]) {
              if (enumerated[ve].tgt != rel.src()) continue;
              std::vector<Scalar> row(level_paths.size(), Scalar::zero(field_));
              for (const auto& [c, p] : rel.terms) {
                auto mid = Path::compose(p, enumerated[ve]);
                auto full = Path::compose(enumerated[ue], *mid);
                auto it = enum_index_.find(full->key());
                if (it == enum_index_.end()) throw FinitenessError("internal path lookup miss");
                row[col_of_enum.at(it->second)] += c;
              }
              rows.push_back(std::move(row));
            }
          }
        }
      }
      if (!rows.empty()) {
        Mat m = Mat::from_rows(field_, rows);
        auto rr = m.rref();
        std::vector<bool> is_pivot(level_paths.size(), false);
        for (auto p : rr.pivots) is_pivot[p] = true;
        // Residues first so rewrite combos can reference them.
        for (std::size_t j = 0; j < level_paths.size(); ++j)
          if (!is_pivot[j]) mark_residue(level_paths[j]);
        for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
          int e = level_paths[rr.pivots[k]];
          to_residue[e] = -1;
          PathCombo combo;
          for (std::size_t j = 0; j < level_paths.size(); ++j) {
            if (is_pivot[j] || j <= rr.pivots[k]) continue;
            Scalar c = rr.reduced.at(k, j);
            if (!c.is_zero()) combo.emplace_back(to_residue[level_paths[j]], -c);
          }
          // entries before the pivot are zero in rref
          for (std::size_t j = 0; j < rr.pivots[k]; ++j) {
            if (!is_pivot[j]) {
              Scalar c = rr.reduced.at(k, j);
              if (!c.is_zero()) combo.emplace_back(to_residue[level_paths[j]], -c);
            }
          }
          rewrite[e] = std::move(combo);
        }
      } else {
        for (int e : level_paths) mark_residue(e);
      }
      bool level_dead = true;
      for (int e : level_paths)
        if (to_residue[e] >= 0) level_dead = false;
      if (level_dead) {
        stop_level = level;
        break;
      }
    } else {
      // Inhomogeneous relations: deferred to the whole-space pass below.
      for (int e : level_paths) to_residue[e] = -2;
    }
    (void)before;
  }

  if (!homogeneous) {
    // Whole truncated space at once, columns ordered by (length, enum order).
    std::vector<int> cols;
    for (const auto& lev : by_level)
      for (int e : lev) cols.push_back(e);
    std::map<int, int> col_of_enum;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of_enum[cols[i]] = int(i);
    std::vector<std::vector<Scalar>> rows;
    for (const auto& rel : relations_) {
      int maxd = 0;
      for (const auto& [c, p] : rel.terms) maxd = std::max(maxd, p.length());
      for (int ue = 0; ue < static_cast<int>(enumerated.size()); ++ue) {
        if (enumerated[ue].src != rel.tgt()) continue;
        for (int ve = 0; ve < static_cast<int>(enumerated.size()); ++ve) {
          if (enumerated[ve].tgt != rel.src()) continue;
          if (enumerated[ue].length() + maxd + enumerated[ve].length() > length_bound) continue;
          std::vector<Scalar> row(cols.size(), Scalar::zero(field_));
          for (const auto& [c, p] : rel.terms) {
            auto mid = Path::compose(p, enumerated[ve]);
            auto full = Path::compose(enumerated[ue], *mid);
            row[col_of_enum.at(enum_index_.at(full->key()))] += c;
          }
          rows.push_back(std::move(row));
        }
      }
    }
    residue_paths_.clear();
    std::fill(to_residue.begin(), to_residue.end(), -2);
    std::vector<bool> is_pivot(cols.size(), false);
    Mat reduced;
    std::vector<std::size_t> pivots;
    if (!rows.empty()) {
      auto rr = Mat::from_rows(field_, rows).rref();
      reduced = rr.reduced;
      pivots = rr.pivots;
      for (auto p : pivots) is_pivot[p] = true;
    }
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!is_pivot[j]) mark_residue(cols[j]);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      int e = cols[pivots[k]];
      to_residue[e] = -1;
      PathCombo combo;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (is_pivot[j]) continue;
        Scalar c = reduced.at(k, j);
        if (!c.is_zero()) combo.emplace_back(to_residue[cols[j]], -c);
      }
      rewrite[e] = std::move(combo);
    }
    int max_res_len = 0;
    for (const auto& p : residue_paths_) max_res_len = std::max(max_res_len, p.length());
    stop_level = max_res_len + 1;
    if (stop_level + max_rel_len + stop_level > length_bound)
      throw FinitenessError(
          "cannot certify finite dimension within length bound " + std::to_string(length_bound) +
          "; residue paths reach length " + std::to_string(max_res_len));
    // Certify: every path of length in [stop_level, bound - max_rel_len] is a pivot.
    for (std::size_t lev = stop_level;
         lev < by_level.size() && lev + max_rel_len <= static_cast<std::size_t>(length_bound);
         ++lev)
      for (int e : by_level[lev])
        if (to_residue[e] >= 0)
          throw FinitenessError("residue path beyond certified nilpotency level");
  }

  if (stop_level < 0)
    throw FinitenessError("quotient not finite-dimensional within length bound " +
                          std::to_string(length_bound));
  nilpotency_ = stop_level;
  enum_to_residue_ = std::move(to_residue);
  enum_rewrite_ = std::move(rewrite);

  // Path lists per (src, tgt) and the coordinate basis.
  paths_by_st_.assign(nv, std::vector<std::vector<int>>(nv));
  for (std::size_t i = 0; i < residue_paths_.size(); ++i)
    paths_by_st_[residue_paths_[i].src][residue_paths_[i].tgt].push_back(static_cast<int>(i));

  // Eager path product table (immutability enables concurrent use).
  for (std::size_t pi = 0; pi < residue_paths_.size(); ++pi)
    for (std::size_t qi = 0; qi < residue_paths_.size(); ++qi) {
      auto comp = Path::compose(residue_paths_[pi], residue_paths_[qi]);
      if (!comp) continue;
      PathCombo combo = reduce_path(*comp);
      if (!combo.empty())
        path_mult_.emplace(std::make_pair(int(pi), int(qi)), std::move(combo));
    }

  basis_offset_.assign(residue_paths_.size(), 0);
  for (std::size_t i = 0; i < residue_paths_.size(); ++i) {
    basis_offset_[i] = static_cast<int>(basis_.size());
    const Path& p = residue_paths_[i];
    int rs = vsize(p.tgt), cs = vsize(p.src);
    for (int r = 0; r < rs; ++r)
      for (int c = 0; c < cs; ++c) basis_.push_back({static_cast<int>(i), r, c});
  }
}

const std::vector<int>& Algebra::paths_between(int src, int tgt) const {
  return paths_by_st_.at(src).at(tgt);
}

std::size_t Algebra::basis_index(int path, int row, int col) const {
  const Path& p = residue_paths_.at(path);
  return static_cast<std::size_t>(basis_offset_[path] + row * vsize(p.src) + col);
}

Mat Algebra::unit() const {
  Mat u = zero_elt();
  for (std::size_t v = 0; v < quiver_.num_vertices(); ++v) {
    Mat e = idempotent(static_cast<int>(v));
    u = u + e;
  }
  return u;
}

Mat Algebra::idempotent(int v) const {
  Mat e = zero_elt();
  int trivial = paths_by_st_.at(v).at(v).front();
  if (path(trivial).length() != 0) throw KeyError("trivial path missing at vertex");
  for (int r = 0; r < vsize(v); ++r)
    e.set(basis_index(trivial, r, r), 0, Scalar::one(field_));
  return e;
}

Mat Algebra::prim_idempotent(int v, int r) const {
  Mat e = zero_elt();
  int trivial = paths_by_st_.at(v).at(v).front();
  e.set(basis_index(trivial, r, r), 0, Scalar::one(field_));
  return e;
}

Mat Algebra::elt_of_basis(std::size_t i) const {
  Mat e = zero_elt();
  e.set(i, 0, Scalar::one(field_));
  return e;
}

Mat Algebra::elt_of_path(int path_id) const {
  Mat e = zero_elt();
  e.set(basis_index(path_id, 0, 0), 0, Scalar::one(field_));
  return e;
}

Algebra::PathCombo Algebra::reduce_path(const Path& p) const {
  if (p.length() >= nilpotency_) return {};
  auto it = enum_index_.find(p.key());
  if (it == enum_index_.end()) return {};
  int e = it->second;
  int res = enum_to_residue_[e];
  if (res >= 0) return {{res, Scalar::one(field_)}};
  return enum_rewrite_[e];
}

const Algebra::PathCombo& Algebra::mul_paths(int pi, int qi) const {
  auto it = path_mult_.find(std::make_pair(pi, qi));
  if (it == path_mult_.end()) return empty_combo_;
  return it->second;
}

void Algebra::check_associativity() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      Mat xy = mul(elt_of_basis(i), elt_of_basis(j));
      if (xy.is_zero()) continue;
      for (std::size_t k = 0; k < dim(); ++k) {
        Mat a = mul(xy, elt_of_basis(k));
        Mat b = mul(elt_of_basis(i), mul(elt_of_basis(j), elt_of_basis(k)));
        if (a != b) throw ArityError("multiplication table is not associative");
      }
    }
}

Mat Algebra::mul(const Mat& x, const Mat& y) const {
  if (x.rows() != dim() || y.rows() != dim() || x.cols() != 1 || y.cols() != 1)
    throw ArityError("algebra element shape mismatch");
  Mat out = zero_elt();
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar xi = x.at(i, 0);
    if (xi.is_zero()) continue;
    const BasisElt& a = basis_[i];
    for (std::size_t j = 0; j < dim(); ++j) {
      Scalar yj = y.at(j, 0);
      if (yj.is_zero()) continue;
      const BasisElt& b = basis_[j];
      if (a.col != b.row) continue;
      const PathCombo& combo = mul_paths(a.path, b.path);
      if (combo.empty()) continue;
      Scalar cc = xi * yj;
      for (const auto& [res, coeff] : combo) {
        std::size_t k = basis_index(res, a.row, b.col);
        out.set(k, 0, out.at(k, 0) + cc * coeff);
      }
    }
  }
  return out;
}

std::vector<std::size_t> Algebra::radical_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (path(basis_[i].path).length() >= 1) out.push_back(i);
  return out;
}

bool Algebra::is_semisimple() const { return radical_basis().empty(); }

Mat Algebra::ideal_closure(const Mat& gens) const {
  Mat span = image_basis(gens);
  for (;;) {
    Mat bigger = span;
    for (std::size_t c = 0; c < span.cols(); ++c) {
      Mat x = span.col(c);
      for (std::size_t i = 0; i < dim(); ++i) {
        Mat b = elt_of_basis(i);
        bigger = bigger.hstack(mul(b, x)).hstack(mul(x, b));
      }
    }
    Mat closed = image_basis(bigger);
    if (closed.cols() == span.cols()) return closed;
    span = closed;
  }
}

Algebra::Ptr Algebra::op() const {
  Quiver rq = quiver_.reversed();
  std::vector<Relation> rrels;
  for (const auto& rel : relations_) {
    Relation r;
    for (const auto& [c, p] : rel.terms) {
      Path rp;
      rp.src = p.tgt;
      rp.tgt = p.src;
      rp.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
      r.terms.emplace_back(c, rp);
    }
    rrels.push_back(std::move(r));
  }
  return make(std::move(rq), std::move(rrels), field_, nilpotency_ + 4);
}

Mat Algebra::op_elt(const Mat& x, const Algebra& opalg) const {
  Mat out = opalg.zero_elt();
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar xi = x.at(i, 0);
    if (xi.is_zero()) continue;
    const BasisElt& b = basis_[i];
    const Path& p = path(b.path);
    Path rp;
    rp.src = p.tgt;
    rp.tgt = p.src;
    rp.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
    auto combo = opalg.reduce_path(rp);
    for (const auto& [res, coeff] : combo) {
      std::size_t k = opalg.basis_index(res, b.col, b.row);
      out.set(k, 0, out.at(k, 0) + xi * coeff);
    }
  }
  return out;
}

std::string Algebra::describe() const {
  std::ostringstream os;
  os << "algebra over " << field_.str() << ": " << quiver_.num_vertices() << " vertices, "
     << quiver_.num_arrows() << " arrows, " << relations_.size() << " relations, dim " << dim()
     << " (" << num_paths() << " residue paths, nilpotency " << nilpotency_ << ")";
  return os.str();
}

}  // namespace redmat
