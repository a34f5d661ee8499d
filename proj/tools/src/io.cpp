#include "frieze_cli/io.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <map>
#include <sstream>

namespace frieze::cli {

namespace {

ScalarKind kind_field(const Json& j) {
  if (!j.contains("scalar")) return ScalarKind::Rational;
  try {
    return parse_kind(j.at("scalar").get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad scalar kind: ") + e.what());
  }
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw ParseError(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

Scalar scalar_from_json(const Json& v, ScalarKind kind) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>(), kind);
  if (v.is_number_integer()) return Scalar::from_int(v.get<long>(), kind);
  if (v.is_number_float() && kind == ScalarKind::Complex) return Scalar::complex(v.get<double>());
  throw ParseError("scalar must be a string or an integer: " + v.dump());
}

std::pair<int, int> line_col(std::string_view text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string index_str(GridIndex g) {
  std::ostringstream os;
  os << "(" << g.I << "," << g.J << ")";
  return os.str();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("invalid JSON", line, col);
  }
}

std::vector<Scalar> parse_list(std::string_view text, ScalarKind kind) {
  std::vector<Scalar> out;
  std::string item;
  std::istringstream is{std::string(text)};
  while (std::getline(is, item, ',')) out.push_back(Scalar::parse(item, kind));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::string join(const std::vector<Scalar>& v, const char* sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].str();
  return s;
}

Json scalars_to_json(const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::vector<Scalar> scalars_from_json(const Json& j, ScalarKind kind) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  std::vector<Scalar> out;
  for (const auto& v : j) out.push_back(scalar_from_json(v, kind));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(row);
  }
  return rows;
}

Json frieze_to_json(const FriezeGrid& g, const std::optional<Coeffs>& coeffs) {
  Json j;
  j["type"] = "symplectic-2-frieze";
  j["width"] = g.width();
  j["period"] = g.period();
  j["scalar"] = to_string(kind_of(g));
  Json entries = Json::object();
  for (int r = 0; r < g.width(); ++r)
    for (int x = 0; x < g.columns(); ++x) {
      GridIndex idx = GridIndex::at(r, x);
      entries[std::to_string(idx.I) + "," + std::to_string(idx.J)] = g.cell(r, x).str();
    }
  j["entries"] = entries;
  if (coeffs) j["coefficients"] = Json{{"a", scalars_to_json(coeffs->a)}, {"b", scalars_to_json(coeffs->b)}};
  return j;
}

FriezeDocument frieze_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("frieze document must be a JSON object");
  const int w = int_field(j, "width");
  if (w < 0) throw ParseError("negative width");
  if (j.contains("period") && j.at("period").get<int>() != w + 5)
    throw ParseError("period must equal width + 5");
  const ScalarKind kind = kind_field(j);
  FriezeGrid g = make_grid(w, kind);
  std::vector<char> seen(static_cast<size_t>(w * g.columns()), 0);
  if (!j.contains("entries") || !j.at("entries").is_object()) throw ParseError("missing 'entries' object");
  for (const auto& [key, val] : j.at("entries").items()) {
    int I = 0, J = 0;
    char comma = 0;
    std::istringstream is(key);
    if (!(is >> I >> comma >> J) || comma != ',' || !is.eof())
      throw ParseError("bad entry key '" + key + "'");
    GridIndex idx{I, J};
    if (!idx.valid()) throw ParseError("entry key '" + key + "' mixes parities");
    const int r = idx.row(), x = idx.col();
    if (r < 0 || r >= w) throw ParseError("entry " + key + " lies outside rows 0..w-1");
    const size_t slot = static_cast<size_t>(r * g.columns() + mod(x, g.columns()));
    if (seen[slot]) throw ParseError("entry " + key + " duplicates another position");
    seen[slot] = 1;
    g.cell(r, x) = scalar_from_json(val, kind);
  }
  for (int r = 0; r < w; ++r)
    for (int x = 0; x < g.columns(); ++x)
      if (!seen[static_cast<size_t>(r * g.columns() + x)])
        throw ParseError("missing entry at " + index_str(GridIndex::at(r, x)));
  FriezeDocument doc{g, std::nullopt};
  if (j.contains("coefficients")) {
    const auto& c = j.at("coefficients");
    doc.coeffs = Coeffs{scalars_from_json(c.at("a"), kind), scalars_from_json(c.at("b"), kind)};
  }
  return doc;
}

std::string render_text(const FriezeGrid& g, int x0) {
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(g.width()));
  size_t width = 1;
  for (int r = 0; r < g.width(); ++r)
    for (int x = x0; x < x0 + g.columns(); ++x) {
      std::string s = (is_black_cell(r, x) ? "*" : "") + g.at(r, x).str();
      width = std::max(width, s.size());
      cells[static_cast<size_t>(r)].push_back(std::move(s));
    }
  std::ostringstream os;
  os << "# symplectic-2-frieze width=" << g.width() << " period=" << g.period()
     << " scalar=" << to_string(kind_of(g)) << " x0=" << x0 << "\n";
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << std::setw(static_cast<int>(width)) << row[c];
    os << "\n";
  }
  return os.str();
}

FriezeGrid parse_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  int w = -1, x0 = 0;
  ScalarKind kind = ScalarKind::Rational;
  std::optional<FriezeGrid> g;
  int r = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t")] == '#') {
      if (g) continue;
      std::istringstream hs(line.substr(line.find('#') + 1));
      std::string tok;
      while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        try {
          if (k == "width") w = std::stoi(v);
          else if (k == "x0") x0 = std::stoi(v);
          else if (k == "scalar") kind = parse_kind(v);
        } catch (const std::exception&) {
          throw ParseError("bad header value '" + tok + "'", lineno, 1);
        }
      }
      if (w < 0) throw ParseError("header needs width=<w>", lineno, 1);
      g = make_grid(w, kind);
      continue;
    }
    if (!g) throw ParseError("missing '# ... width=' header", lineno, 1);
    if (r >= w) throw ParseError("more rows than the width", lineno, 1);
    size_t pos = 0;
    int x = x0;
    while (true) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string::npos) break;
      size_t end = line.find_first_of(" \t\r", pos);
      std::string tok = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      const int col = static_cast<int>(pos) + 1;
      const bool star = tok[0] == '*';
      if (x >= x0 + g->columns()) throw ParseError("row longer than 2n entries", lineno, col);
      if (star != is_black_cell(r, x))
        throw ParseError(std::string("entry should ") + (star ? "not " : "") + "be marked black", lineno, col);
      try {
        g->cell(r, x) = Scalar::parse(star ? tok.substr(1) : tok, kind);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno, col);
      }
      ++x;
      if (end == std::string::npos) break;
      pos = end;
    }
    if (x != x0 + g->columns())
      throw ParseError("row has " + std::to_string(x - x0) + " entries, expected " +
                           std::to_string(g->columns()),
                       lineno, static_cast<int>(line.size()) + 1);
    ++r;
  }
  if (!g) throw ParseError("empty frieze text");
  if (r != w) throw ParseError("expected " + std::to_string(w) + " rows, found " + std::to_string(r), lineno, 1);
  return *g;
}

FriezeDocument parse_frieze(std::string_view text) {
  auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string_view::npos && text[p] == '{') return frieze_from_json(parse_json(text));
  return FriezeDocument{parse_text(text), std::nullopt};
}

void require_local_rules(const FriezeGrid& g) {
  auto v = check_local_rules(g);
  if (!v.empty())
    throw VerificationFailure("local rule fails at " + index_str(v[0].center) + ": " + v[0].lhs.str() +
                              " != " + v[0].rhs.str());
}

Json sl_to_json(const SLFrieze& f) {
  Json j;
  j["type"] = "sl-frieze";
  j["k"] = f.k();
  j["width"] = f.width();
  j["period"] = f.period();
  j["scalar"] = to_string(f.kind());
  Json rows = Json::array();
  for (int r = 0; r < f.width(); ++r) {
    Json row = Json::array();
    for (int i = 0; i < f.period(); ++i) row.push_back(f.at(i, i + r).str());
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

SLFrieze sl_from_json(const Json& j) {
  const int k = int_field(j, "k"), w = int_field(j, "width");
  const ScalarKind kind = kind_field(j);
  SLFrieze f(k, w, kind);
  if (!j.contains("rows") || j.at("rows").size() != static_cast<size_t>(w))
    throw ParseError("'rows' must list w rows");
  for (int r = 0; r < w; ++r) {
    auto row = scalars_from_json(j.at("rows").at(static_cast<size_t>(r)), kind);
    if (static_cast<int>(row.size()) != f.period())
      throw ParseError("row " + std::to_string(r) + " must have n = w + k + 2 entries");
    for (int i = 0; i < f.period(); ++i) f.cell(i, r) = row[static_cast<size_t>(i)];
  }
  return f;
}

std::string render_sl(const SLFrieze& f) {
  std::ostringstream os;
  os << "# sl-frieze k=" << f.k() << " width=" << f.width() << " period=" << f.period() << "\n";
  for (int r = 0; r < f.width(); ++r) {
    os << "row " << r << ":";
    for (int i = 0; i < f.period(); ++i) os << " " << f.at(i, i + r).str();
    os << "\n";
  }
  return os.str();
}

Json polygon_to_json(const Polygon& p) {
  Json j;
  j["type"] = "polygon";
  j["first"] = p.first;
  j["scalar"] = to_string(p.form.a.kind());
  j["form"] = {{"variant", p.form.variant == FormVariant::Omega ? "omega" : "omega-check"},
               {"a", p.form.a.str()}};
  Json v = Json::array();
  for (const auto& x : p.vertices) v.push_back(scalars_to_json(x));
  j["vertices"] = v;
  return j;
}

Polygon polygon_from_json(const Json& j) {
  const ScalarKind kind = kind_field(j);
  Polygon p;
  p.first = j.contains("first") ? j.at("first").get<int>() : 1;
  if (!j.contains("form")) throw ParseError("polygon needs a 'form'");
  const auto& f = j.at("form");
  std::string variant = f.value("variant", "omega");
  if (variant != "omega" && variant != "omega-check") throw ParseError("unknown form variant '" + variant + "'");
  p.form.variant = variant == "omega" ? FormVariant::Omega : FormVariant::OmegaCheck;
  p.form.a = scalar_from_json(f.at("a"), kind);
  if (!j.contains("vertices")) throw ParseError("polygon needs 'vertices'");
  for (const auto& v : j.at("vertices")) {
    auto vec = scalars_from_json(v, kind);
    if (vec.size() != 4) throw ParseError("vertices must have 4 coordinates");
    p.vertices.push_back(std::move(vec));
  }
  if (p.vertices.size() < 5) throw ParseError("polygon needs at least 5 vertices");
  return p;
}

}  // namespace frieze::cli
