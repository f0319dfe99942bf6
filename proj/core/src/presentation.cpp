#include "redmat/presentation.hpp"

#include <cctype>
#include <sstream>

namespace redmat {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_any(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (seps.find(ch) != std::string::npos) {
      if (!strip(cur).empty()) out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!strip(cur).empty()) out.push_back(strip(cur));
  return out;
}

bool looks_numeric(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i >= t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])) && t[i] != '/') return false;
  return true;
}

// Splits "a + 2*b - c" into signed terms.
std::vector<std::pair<int, std::string>> signed_terms(const std::string& expr) {
  std::vector<std::pair<int, std::string>> out;
  int sign = 1;
  std::string cur;
  for (std::size_t i = 0; i < expr.size(); ++i) {
    char ch = expr[i];
    if (ch == '+' || ch == '-') {
      if (!strip(cur).empty()) out.emplace_back(sign, strip(cur));
      sign = (ch == '-') ? -1 : 1;
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!strip(cur).empty()) out.emplace_back(sign, strip(cur));
  return out;
}

// One term: optional numeric coefficient factor, then a path product.
struct ParsedTerm {
  Scalar coeff;
  std::vector<std::string> factors;  // composition order (leftmost applied last)
  ParsedTerm(Field f) : coeff(Scalar::one(f)) {}
};

ParsedTerm parse_term(Field f, const std::string& text) {
  ParsedTerm t(f);
  auto parts = split_any(text, "*");
  if (parts.empty()) throw ParseError("empty term in '" + text + "'");
  std::size_t i = 0;
  if (looks_numeric(parts[0])) {
    t.coeff = Scalar::parse(f, parts[0]);
    i = 1;
  }
  for (; i < parts.size(); ++i) t.factors.push_back(parts[i]);
  return t;
}

Path path_of_factors(const Quiver& q, const std::vector<std::string>& factors) {
  if (factors.empty()) throw ParseError("missing path in relation term");
  // factors are in composition order; application order is reversed
  Path p;
  bool first = true;
  for (std::size_t i = factors.size(); i-- > 0;) {
    int a = q.arrow_index(factors[i]);
    if (first) {
      p.src = q.arrow(a).src;
      p.tgt = q.arrow(a).tgt;
      p.arrows = {a};
      first = false;
    } else {
      if (q.arrow(a).src != p.tgt)
        throw ParseError("non-composable path '" + factors[i] + "' in relation");
      p.arrows.push_back(a);
      p.tgt = q.arrow(a).tgt;
    }
  }
  return p;
}

Relation parse_relation_line(const Quiver& q, Field f, const std::string& line) {
  auto eq = line.find('=');
  if (eq == std::string::npos) throw ParseError("relation missing '=': " + line);
  std::string lhs = strip(line.substr(0, eq));
  std::string rhs = strip(line.substr(eq + 1));
  Relation rel;
  auto add_side = [&](const std::string& side, int outer_sign) {
    if (strip(side) == "0") return;
    for (const auto& [sign, term] : signed_terms(side)) {
      ParsedTerm t = parse_term(f, term);
      Scalar c = t.coeff * Scalar::of_int(f, sign * outer_sign);
      rel.terms.emplace_back(c, path_of_factors(q, t.factors));
    }
  };
  add_side(lhs, 1);
  add_side(rhs, -1);
  // Merge duplicate paths.
  Relation merged;
  for (const auto& [c, p] : rel.terms) {
    bool found = false;
    for (auto& [mc, mp] : merged.terms)
      if (mp == p) {
        mc += c;
        found = true;
        break;
      }
    if (!found) merged.terms.emplace_back(c, p);
  }
  Relation out;
  for (const auto& [c, p] : merged.terms)
    if (!c.is_zero()) out.terms.emplace_back(c, p);
  if (out.terms.empty()) throw ParseError("relation is trivially zero: " + line);
  return out;
}

void parse_vertex_line(Quiver& q, const std::string& line) {
  for (const auto& tok : split_any(line, ", \t")) {
    auto par = tok.find('(');
    if (par == std::string::npos) {
      q.add_vertex(tok);
    } else {
      if (tok.back() != ')') throw ParseError("bad vertex token '" + tok + "'");
      std::string name = strip(tok.substr(0, par));
      int size = std::stoi(tok.substr(par + 1, tok.size() - par - 2));
      q.add_vertex(name, size);
    }
  }
}

void parse_arrow_line(Quiver& q, const std::string& line) {
  auto colon = line.find(':');
  if (colon == std::string::npos) throw ParseError("arrow line missing ':': " + line);
  std::string name = strip(line.substr(0, colon));
  std::string rest = line.substr(colon + 1);
  auto arrow_pos = rest.find("->");
  if (arrow_pos == std::string::npos) throw ParseError("arrow line missing '->': " + line);
  std::string src = strip(rest.substr(0, arrow_pos));
  std::string tgt = strip(rest.substr(arrow_pos + 2));
  q.add_arrow(name, src, tgt);
}

}  // namespace

Presentation parse_quiver_file(const std::string& text, Field field) {
  Presentation p;
  enum class Sec {
    None,
    Vertices,
    Arrows,
    Relations,
    OverVertices,
    OverArrows,
    OverRelations,
    Ideal,
    Embedding
  };
  Sec sec = Sec::None;
  std::istringstream in(text);
  std::string raw;
  std::vector<std::string> rel_lines, over_rel_lines;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line == "[vertices]")
        sec = Sec::Vertices;
      else if (line == "[arrows]")
        sec = Sec::Arrows;
      else if (line == "[relations]")
        sec = Sec::Relations;
      else if (line == "[over.vertices]")
        sec = Sec::OverVertices;
      else if (line == "[over.arrows]")
        sec = Sec::OverArrows;
      else if (line == "[over.relations]")
        sec = Sec::OverRelations;
      else if (line == "[ideal]")
        sec = Sec::Ideal;
      else if (line == "[embedding]")
        sec = Sec::Embedding;
      else
        throw ParseError("unknown section " + line);
      if (sec == Sec::OverVertices || sec == Sec::OverArrows || sec == Sec::OverRelations ||
          sec == Sec::Ideal || sec == Sec::Embedding)
        p.has_over = true;
      continue;
    }
    switch (sec) {
      case Sec::None:
        throw ParseError("content before any section: " + line);
      case Sec::Vertices:
        parse_vertex_line(p.quiver, line);
        break;
      case Sec::Arrows:
        parse_arrow_line(p.quiver, line);
        break;
      case Sec::Relations:
        rel_lines.push_back(line);
        break;
      case Sec::OverVertices:
        parse_vertex_line(p.over_quiver, line);
        break;
      case Sec::OverArrows:
        parse_arrow_line(p.over_quiver, line);
        break;
      case Sec::OverRelations:
        over_rel_lines.push_back(line);
        break;
      case Sec::Ideal:
        for (const auto& tok : split_any(line, ", \t")) p.ideal_generators.push_back(tok);
        break;
      case Sec::Embedding: {
        auto arrow_pos = line.find("->");
        if (arrow_pos == std::string::npos)
          throw ParseError("embedding line missing '->': " + line);
        p.embedding_lines.emplace_back(strip(line.substr(0, arrow_pos)),
                                       strip(line.substr(arrow_pos + 2)));
        break;
      }
    }
  }
  for (const auto& l : rel_lines) p.relations.push_back(parse_relation_line(p.quiver, field, l));
  for (const auto& l : over_rel_lines)
    p.over_relations.push_back(parse_relation_line(p.over_quiver, field, l));
  return p;
}

Algebra::Ptr parse_presentation(const std::string& text, Field field, int length_bound) {
  Presentation p = parse_quiver_file(text, field);
  return Algebra::make(p.quiver, p.relations, field, length_bound);
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream os;
  auto dump_quiver = [&os](const Quiver& q, const std::string& prefix) {
    os << "[" << prefix << "vertices]\n";
    for (const auto& v : q.vertices()) {
      os << v.id;
      if (v.size != 1) os << "(" << v.size << ")";
      os << "\n";
    }
    os << "[" << prefix << "arrows]\n";
    for (const auto& a : q.arrows())
      os << a.id << ": " << q.vertex(a.src).id << " -> " << q.vertex(a.tgt).id << "\n";
  };
  auto dump_rels = [&os](const Quiver& q, const std::vector<Relation>& rels,
                         const std::string& prefix) {
    if (rels.empty()) return;
    os << "[" << prefix << "relations]\n";
    for (const auto& r : rels) os << r.str(q) << "\n";
  };
  dump_quiver(p.quiver, "");
  dump_rels(p.quiver, p.relations, "");
  if (p.has_over) {
    dump_quiver(p.over_quiver, "over.");
    dump_rels(p.over_quiver, p.over_relations, "over.");
    if (!p.ideal_generators.empty()) {
      os << "[ideal]\n";
      for (std::size_t i = 0; i < p.ideal_generators.size(); ++i)
        os << p.ideal_generators[i] << (i + 1 < p.ideal_generators.size() ? " " : "\n");
    }
    if (!p.embedding_lines.empty()) {
      os << "[embedding]\n";
      for (const auto& [l, r] : p.embedding_lines) os << l << " -> " << r << "\n";
    }
  }
  return os.str();
}

Presentation presentation_of(const Algebra& a) {
  Presentation p;
  p.quiver = a.quiver();
  p.relations = a.relations();
  return p;
}

Mat parse_element(const Algebra& a, const std::string& expr) {
  Field f = a.field();
  Mat out = a.zero_elt();
  std::string body = strip(expr);
  if (body == "0") return out;
  for (const auto& [sign, term] : signed_terms(body)) {
    ParsedTerm t = parse_term(f, term);
    Scalar coeff = t.coeff * Scalar::of_int(f, sign);
    if (t.factors.empty()) throw ParseError("constant term in element expression: " + term);
    // Each factor: vertex name (idempotent) or arrow name, optional [r,c].
    Mat prod = a.unit();
    bool first = true;
    for (const auto& rawfac : t.factors) {
      std::string fac = rawfac;
      int row = -1, col = -1;
      auto br = fac.find('[');
      if (br != std::string::npos) {
        if (fac.back() != ']') throw ParseError("bad coordinate suffix in '" + fac + "'");
        auto nums = split_any(fac.substr(br + 1, fac.size() - br - 2), ",");
        if (nums.size() != 2) throw ParseError("bad coordinate suffix in '" + fac + "'");
        row = std::stoi(nums[0]) - 1;
        col = std::stoi(nums[1]) - 1;
        fac = strip(fac.substr(0, br));
      }
      std::string name = fac;
      if (name.rfind("e_", 0) == 0 && a.quiver().find_vertex(name.substr(2)))
        name = name.substr(2);
      Mat factor = a.zero_elt();
      if (auto v = a.quiver().find_vertex(name)) {
        int trivial = a.paths_between(*v, *v).front();
        if (row < 0) {
          factor = a.idempotent(*v);
        } else {
          factor.set(a.basis_index(trivial, row, col), 0, Scalar::one(f));
        }
      } else if (auto arr = a.quiver().find_arrow(name)) {
        Path ap{a.quiver().arrow(*arr).src, a.quiver().arrow(*arr).tgt, {*arr}};
        auto combo = a.reduce_path(ap);
        if (row < 0) row = col = 0;  // bare name = coordinate [1,1]
        for (const auto& [res, c] : combo) {
          std::size_t k = a.basis_index(res, row, col);
          factor.set(k, 0, factor.at(k, 0) + c);
        }
      } else {
        throw ParseError("unknown generator '" + name + "' in element expression");
      }
      prod = first ? factor : a.mul(prod, factor);
      first = false;
    }
    out = out + prod.scaled(coeff);
  }
  return out;
}

}  // namespace redmat
