#include "seqreg/dsl.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "seqreg/errors.hpp"
#include "seqreg/poly_parse.hpp"

namespace seqreg {

namespace {

// A bracketed list item: either a leaf (raw text with its column) or a
// nested list.
struct Node {
  std::string text;
  int column = 0;
  std::vector<Node> items;
  bool is_list = false;
};

class LineParser {
 public:
  LineParser(std::string_view line, int lineno) : s_(line), line_(lineno) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
    throw ParseError(msg, line_, static_cast<int>(pos) + 1);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  /// Position of the next token.
  std::size_t token_start() {
    skip_ws();
    return pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '[') ++pos_;
    if (start == pos_) fail("expected a word");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string rest() {
    skip_ws();
    std::string r(s_.substr(pos_));
    pos_ = s_.size();
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
    return r;
  }

  int integer(const std::string& what) {
    skip_ws();
    std::size_t start = pos_;
    std::string w = word();
    try {
      std::size_t used = 0;
      long v = std::stol(w, &used);
      if (used != w.size()) fail("expected an integer " + what, start);
      return static_cast<int>(v);
    } catch (const std::logic_error&) {
      fail("expected an integer " + what, start);
    }
  }

  Node list() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '[') fail("expected '['");
    Node n;
    n.is_list = true;
    n.column = static_cast<int>(pos_) + 1;
    ++pos_;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
      return n;
    }
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '[') {
        n.items.push_back(list());
      } else {
        n.items.push_back(leaf());
      }
      skip_ws();
      if (pos_ >= s_.size()) fail("unterminated list");
      if (s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (s_[pos_] == ']') {
        ++pos_;
        return n;
      }
      fail("expected ',' or ']'");
    }
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing text");
  }

 private:
  Node leaf() {
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ',' || c == ']')) break;
      if (c == '[') fail("unexpected '['");
      ++pos_;
    }
    Node n;
    n.text = std::string(s_.substr(start, pos_ - start));
    n.column = static_cast<int>(start) + 1;
    while (!n.text.empty() && std::isspace(static_cast<unsigned char>(n.text.back()))) n.text.pop_back();
    if (n.text.empty()) fail("empty list item", start);
    return n;
  }

  std::string_view s_;
  int line_;
  std::size_t pos_ = 0;
};

class DocumentBuilder {
 public:
  TowerDocument build(std::string_view text) {
    std::size_t start = 0;
    int lineno = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++lineno;
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      std::size_t hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);
      handle(line, lineno);
      start = end + 1;
    }
    if (!spec_) throw ParseError("document declares no variables", lineno, 1);
    doc_.spec = *spec_;
    return std::move(doc_);
  }

 private:
  void handle(std::string_view line, int lineno) {
    LineParser p(line, lineno);
    if (p.at_end()) return;
    std::size_t kpos = p.token_start();
    std::string key = p.word();
    if (key == "field") {
      if (field_) p.fail("field declared twice", kpos);
      std::size_t vpos = p.token_start();
      std::string v = p.word();
      if (v == "Q" || v == "QQ") {
        field_ = Field::rationals();
      } else {
        std::uint64_t q = 0;
        try {
          std::size_t used = 0;
          q = std::stoull(v, &used);
          if (used != v.size()) throw std::invalid_argument(v);
        } catch (const std::logic_error&) {
          p.fail("unknown field '" + v + "' (expected Q or a prime)", vpos);
        }
        try {
          field_ = Field::prime(q);
        } catch (const Error& e) {
          p.fail("field modulus " + v + " is not a supported prime", vpos);
        }
      }
      p.expect_end();
      return;
    }
    if (key == "vars") {
      if (!field_) p.fail("'field' must come before 'vars'", kpos);
      if (spec_) p.fail("vars declared twice", kpos);
      std::vector<std::string> vars;
      std::set<std::string> seen;
      while (!p.at_end()) {
        std::size_t vpos = p.token_start();
        std::string v = p.word();
        if (!std::isalpha(static_cast<unsigned char>(v[0]))) p.fail("invalid variable name '" + v + "'", vpos);
        for (char c : v) {
          if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') p.fail("invalid variable name '" + v + "'", vpos);
        }
        if (!seen.insert(v).second) p.fail("duplicate variable '" + v + "'", vpos);
        vars.push_back(v);
      }
      if (vars.empty()) p.fail("expected at least one variable");
      try {
        spec_ = DGRingSpec(*field_, vars, {});
      } catch (const InvalidInput& e) {
        p.fail(e.what(), kpos);
      }
      return;
    }
    if (!spec_) p.fail("'" + key + "' before 'field' and 'vars'", kpos);
    try {
      keyword(p, key, kpos, lineno);
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidInput& e) {
      p.fail(e.what(), kpos);
    }
  }

  void keyword(LineParser& p, const std::string& key, std::size_t kpos, int lineno) {
    if (key == "quotient") {
      if (quotient_seen_) p.fail("quotient declared twice", kpos);
      if (!spec_->steps().empty()) p.fail("'quotient' must precede koszul and trivext steps", kpos);
      quotient_seen_ = true;
      auto gens = polys(p.list(), lineno);
      p.expect_end();
      DGRingSpec fresh(spec_->field(), spec_->vars(), gens);
      if (spec_->point()) fresh.set_point(*spec_->point());
      if (!spec_->label().empty()) fresh.set_label(spec_->label());
      spec_ = fresh;
    } else if (key == "koszul") {
      auto elems = polys(p.list(), lineno);
      p.expect_end();
      if (elems.empty()) p.fail("koszul step needs at least one element", kpos);
      spec_->add_koszul(elems);
    } else if (key == "trivext") {
      std::size_t spos = p.token_start();
      int shift = p.integer("shift");
      if (shift < 1) p.fail("trivext shift must be at least 1", spos);
      Ideal ambient(spec_->field(), spec_->nvars(), spec_->h0_generators());
      std::optional<PresentedModule> m;
      if (p.peek() == '[') {
        m = PresentedModule::cyclic(ambient, polys(p.list(), lineno));
      } else {
        std::size_t wpos = p.token_start();
        std::string form = p.word();
        if (form == "free") {
          int rank = p.integer("rank");
          if (rank < 1) p.fail("rank must be positive", wpos);
          m = PresentedModule::free(ambient, static_cast<std::size_t>(rank));
        } else if (form == "module") {
          int rank = p.integer("rank");
          if (rank < 1) p.fail("rank must be positive", wpos);
          Node cols = p.list();
          PolyMatrix rel(spec_->field(), spec_->nvars(), static_cast<std::size_t>(rank));
          for (const auto& c : cols.items) {
            if (!c.is_list) throw ParseError("expected a relation column", lineno, c.column);
            auto col = polys(c, lineno);
            if (col.size() != static_cast<std::size_t>(rank)) {
              throw ParseError("relation column has " + std::to_string(col.size()) + " entries, expected " +
                                   std::to_string(rank),
                               lineno, c.column);
            }
            rel.add_column(col);
          }
          m = PresentedModule(ambient, rel);
        } else {
          p.fail("expected '[', 'free' or 'module'", wpos);
        }
      }
      p.expect_end();
      spec_->add_trivext(*m, shift);
    } else if (key == "point") {
      if (spec_->point()) p.fail("point declared twice", kpos);
      spec_->set_point(point(p.list(), lineno));
      p.expect_end();
    } else if (key == "label") {
      spec_->set_label(p.rest());
    } else if (key == "elements") {
      doc_.elements = polys(p.list(), lineno);
      p.expect_end();
    } else if (key == "matrix") {
      Node rows = p.list();
      p.expect_end();
      std::vector<std::vector<Poly>> entries;
      for (const auto& r : rows.items) {
        if (!r.is_list) throw ParseError("expected a matrix row", lineno, r.column);
        entries.push_back(polys(r, lineno));
        if (entries.back().size() != entries.front().size()) throw ParseError("ragged matrix row", lineno, r.column);
      }
      if (entries.empty()) p.fail("empty matrix", kpos);
      PolyMatrix m = PolyMatrix::zero(spec_->field(), spec_->nvars(), entries.size(), entries[0].size());
      for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = 0; j < entries[i].size(); ++j) m.at(i, j) = entries[i][j];
      }
      doc_.matrices.push_back(std::move(m));
    } else if (key == "points") {
      Node pts = p.list();
      p.expect_end();
      for (const auto& q : pts.items) {
        if (!q.is_list) throw ParseError("expected a point", lineno, q.column);
        doc_.points.push_back(point(q, lineno));
      }
    } else {
      p.fail("unknown keyword '" + key + "'", kpos);
    }
  }

  std::vector<Poly> polys(const Node& list, int lineno) const {
    std::vector<Poly> out;
    for (const auto& item : list.items) {
      if (item.is_list) throw ParseError("expected a polynomial, found a list", lineno, item.column);
      out.push_back(parse_poly(item.text, spec_->field(), spec_->vars(), lineno, item.column));
    }
    return out;
  }

  std::vector<FieldElem> point(const Node& list, int lineno) const {
    if (list.items.size() != static_cast<std::size_t>(spec_->nvars())) {
      throw ParseError("point has " + std::to_string(list.items.size()) + " coordinates, expected " +
                           std::to_string(spec_->nvars()),
                       lineno, list.column);
    }
    std::vector<FieldElem> out;
    for (const auto& item : list.items) {
      if (item.is_list) throw ParseError("expected a coordinate", lineno, item.column);
      try {
        out.push_back(spec_->field().parse(item.text));
      } catch (const Error& e) {
        throw ParseError("invalid coordinate '" + item.text + "'", lineno, item.column);
      }
    }
    return out;
  }

  std::optional<Field> field_;
  std::optional<DGRingSpec> spec_;
  bool quotient_seen_ = false;
  TowerDocument doc_;
};

std::string poly_list(const std::vector<Poly>& ps, const std::vector<std::string>& names) {
  std::string s = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) s += ", ";
    s += ps[i].to_string(names);
  }
  return s + "]";
}

std::string elem_list(const std::vector<FieldElem>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ", ";
    s += xs[i].to_string();
  }
  return s + "]";
}

}  // namespace

TowerDocument parse_tower(std::string_view text) { return DocumentBuilder().build(text); }

TowerDocument parse_tower_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tower(ss.str());
}

std::string format_tower(const TowerDocument& doc) {
  const DGRingSpec& s = doc.spec;
  const auto& names = s.vars();
  std::ostringstream os;
  os << "field " << (s.field().is_rational() ? std::string("Q") : std::to_string(s.field().characteristic())) << "\n";
  os << "vars";
  for (const auto& v : names) os << " " << v;
  os << "\n";
  if (!s.label().empty()) os << "label " << s.label() << "\n";
  os << "quotient " << poly_list(s.base_ideal(), names) << "\n";
  for (const auto& step : s.steps()) {
    if (const auto* k = std::get_if<KoszulStep>(&step)) {
      os << "koszul " << poly_list(k->elements, names) << "\n";
      continue;
    }
    const auto& t = std::get<TrivExtStep>(step);
    const PolyMatrix& rel = t.module.relations();
    os << "trivext " << t.shift << " module " << t.module.ngens() << " [";
    for (std::size_t j = 0; j < rel.cols(); ++j) os << (j ? ", " : "") << poly_list(rel.column(j), names);
    os << "]\n";
  }
  if (s.point()) os << "point " << elem_list(*s.point()) << "\n";
  if (!doc.elements.empty()) os << "elements " << poly_list(doc.elements, names) << "\n";
  for (const auto& m : doc.matrices) {
    os << "matrix [";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<Poly> row;
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
      os << (i ? ", " : "") << poly_list(row, names);
    }
    os << "]\n";
  }
  if (!doc.points.empty()) {
    os << "points [";
    for (std::size_t i = 0; i < doc.points.size(); ++i) os << (i ? ", " : "") << elem_list(doc.points[i]);
    os << "]\n";
  }
  return os.str();
}

}  // namespace seqreg
