#include "frieze_cli/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "frieze/cluster.hpp"
#include "frieze/diffeq.hpp"
#include "frieze/legendrian.hpp"
#include "frieze/search.hpp"
#include "frieze/slfrieze.hpp"
#include "frieze_cli/io.hpp"

namespace frieze::cli {

namespace {

struct Options {
  std::string scalar = "rational";
  double tolerance = 1e-9;
  std::string out_path;
  std::string input = "-";
  std::string format = "text";
};

class Session {
 public:
  Session(Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  ScalarKind kind() const { return parse_kind(o_.scalar); }
  bool json() const { return o_.format == "json"; }

  std::string read_input() {
    if (o_.input == "-") return {std::istreambuf_iterator<char>(in_), {}};
    std::ifstream f(o_.input);
    if (!f) throw ParseError("cannot open input file '" + o_.input + "'");
    return {std::istreambuf_iterator<char>(f), {}};
  }

  std::ostream& out() { return buf_; }

  void flush() {
    if (o_.out_path.empty()) {
      out_ << buf_.str();
      return;
    }
    std::ofstream f(o_.out_path);
    if (!f) throw ParseError("cannot write '" + o_.out_path + "'");
    f << buf_.str();
  }

  void emit_frieze(const FriezeGrid& g, const std::optional<Coeffs>& c = std::nullopt) {
    if (json()) out() << frieze_to_json(g, c).dump(2) << "\n";
    else out() << render_text(g);
  }

 private:
  Options& o_;
  std::istream& in_;
  std::ostream& out_;
  std::ostringstream buf_;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string window_str(const char* what, int size, int i, int j) {
  std::ostringstream os;
  os << what << " " << size << "x" << size << " window at d_{" << i << "," << j << "} "
     << index_str(GridIndex::black(i, j));
  return os.str();
}

// Coefficients from --a/--b when given, else from a frieze document on input.
SymmetricDiffEq equation_from(Session& s, const std::string& a, const std::string& b) {
  if (!a.empty() || !b.empty()) {
    if (a.empty() || b.empty()) throw ParseError("--a and --b must be given together");
    return SymmetricDiffEq(parse_list(a, s.kind()), parse_list(b, s.kind()));
  }
  auto doc = parse_frieze(s.read_input());
  require_local_rules(doc.grid);
  Coeffs c = doc.coeffs ? *doc.coeffs : extract_coeffs(doc.grid);
  return SymmetricDiffEq(c.a, c.b);
}

FriezeGrid frieze_input(Session& s) {
  auto doc = parse_frieze(s.read_input());
  require_local_rules(doc.grid);
  return doc.grid;
}

SLFrieze sl_input(Session& s) { return sl_from_json(parse_json(s.read_input())); }

void emit_sl(Session& s, const SLFrieze& f) {
  if (s.json()) s.out() << sl_to_json(f).dump(2) << "\n";
  else s.out() << render_sl(f);
}

int report_sl(Session& s, const SLFrieze& f, std::ostream& err) {
  SLReport r = check_sl(f);
  if (r.ok) return kOk;
  err << "SL check fails: " << window_str("adjacent", r.size, r.i, r.j) << ": det " << r.value.str()
      << ", expected " << r.expected.str() << "\n";
  (void)s;
  return kVerificationFailed;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "'");
    }
  }
  return out;
}

ExchangeMatrix matrix_arg(const std::string& text, int width) {
  if (text.empty()) return c2_square_aw(width);
  Json j = parse_json(text);
  try {
    return ExchangeMatrix(j.get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception&) {
    throw ParseError("--matrix must be a JSON array of integer rows");
  }
}

Seed apply_sequence(Seed s, const std::vector<int>& seq) {
  for (int k : seq) {
    if (k < 1 || k > s.matrix.size()) throw ParseError("mutation index out of range: " + std::to_string(k));
    s = mutate_seed(s, k - 1);
  }
  return s;
}

Dedup dedup_of(const std::string& d) {
  if (d == "none") return Dedup::None;
  if (d == "translation") return Dedup::Translation;
  if (d == "dihedral") return Dedup::Dihedral;
  throw ParseError("unknown dedup mode '" + d + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Symplectic 2-friezes, superperiodic equations and Legendrian polygons"};
  app.require_subcommand(1);
  app.add_option("--scalar", o.scalar, "rational | gaussian | complex-float")
      ->check(CLI::IsMember({"rational", "gaussian", "complex-float"}));
  app.add_option("--tolerance", o.tolerance, "Zero tolerance for complex-float entries");
  app.add_option("--out", o.out_path, "Write output to this file instead of stdout");

  Session s(o, in, out);
  std::function<int()> action;
  auto input_opt = [&](CLI::App* c) { c->add_option("input", o.input, "Input file, '-' for stdin"); };
  auto format_opt = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  };

  // ---- frieze --------------------------------------------------------------
  auto* fr = app.add_subcommand("frieze", "Build, verify and transform symplectic 2-friezes");
  fr->require_subcommand(1);
  std::string a_list, b_list;
  {
    auto* c = fr->add_subcommand("from-coeffs", "Frieze from the coefficients a_i, b_i");
    c->add_option("--a", a_list, "a_0,...,a_{n-1}")->required();
    c->add_option("--b", b_list, "b_0,...,b_{n-1}")->required();
    format_opt(c);
    c->callback([&] {
      action = [&] {
        auto a = parse_list(a_list, s.kind()), b = parse_list(b_list, s.kind());
        s.emit_frieze(propagate_from_coeffs(a, b), Coeffs{a, b});
        return kOk;
      };
    });
  }
  std::string shape_list, value_list;
  {
    auto* c = fr->add_subcommand("from-zigzag", "Frieze from the values on a double zig-zag");
    c->add_option("--shape", shape_list, "Left column of the cell pair in each row")->required();
    c->add_option("--values", value_list, "2w values, row by row, left before right")->required();
    format_opt(c);
    c->callback([&] {
      action = [&] {
        ZigZagShape shape{parse_ints(shape_list)};
        if (!valid_shape(shape)) throw ParseError("zig-zag shape must move by at most one column per row");
        auto vals = parse_list(value_list, s.kind());
        s.emit_frieze(propagate_from_zigzag(make_zigzag(shape, vals), shape.width(), s.kind()));
        return kOk;
      };
    });
  }
  {
    auto* c = fr->add_subcommand("verify", "Check the frieze rule, tameness and glide symmetry");
    input_opt(c);
    c->callback([&] {
      action = [&] {
        FriezeGrid g = parse_frieze(s.read_input()).grid;
        int status = kOk;
        auto rules = check_local_rules(g);
        if (rules.empty()) {
          s.out() << "local rules: ok\n";
        } else {
          const auto& v = rules.front();
          s.out() << "local rules: FAIL at " << index_str(v.center) << ": " << v.lhs.str()
                  << " != " << v.rhs.str() << " (" << rules.size() << " violations)\n";
          status = kVerificationFailed;
        }
        TameReport t = check_tame(g);
        if (t.tame) {
          s.out() << "tame: ok\n";
        } else {
          s.out() << "tame: FAIL, " << window_str("black", t.size, t.i, t.j) << ": det "
                  << t.value.str() << ", expected " << t.expected.str() << "\n";
          status = kVerificationFailed;
        }
        bool glide = check_glide(g);
        s.out() << "glide: " << (glide ? "ok" : "FAIL") << "\n";
        if (!glide) status = kVerificationFailed;
        s.out() << "period: " << check_periodicity(g) << "\n";
        return status;
      };
    });
  }
  int x0 = 0;
  {
    auto* c = fr->add_subcommand("show", "Re-render a frieze document");
    input_opt(c);
    format_opt(c);
    c->add_option("--x0", x0, "First column of the text rendering");
    c->callback([&] {
      action = [&] {
        auto doc = parse_frieze(s.read_input());
        require_local_rules(doc.grid);
        if (s.json()) s.out() << frieze_to_json(doc.grid, doc.coeffs).dump(2) << "\n";
        else s.out() << render_text(doc.grid, x0);
        return kOk;
      };
    });
  }
  {
    auto* c = fr->add_subcommand("twist", "Negate the black entries of even rows (odd width)");
    input_opt(c);
    format_opt(c);
    c->callback([&] {
      action = [&] {
        s.emit_frieze(sign_twist(frieze_input(s)));
        return kOk;
      };
    });
  }

  // ---- eq ------------------------------------------------------------------
  auto* eq = app.add_subcommand("eq", "Symmetric 4th-order difference equations");
  eq->require_subcommand(1);
  auto eq_opts = [&](CLI::App* c) {
    c->add_option("--a", a_list, "a_0,...,a_{n-1}");
    c->add_option("--b", b_list, "b_0,...,b_{n-1}");
    input_opt(c);
  };
  {
    auto* c = eq->add_subcommand("check", "Are all solutions n-antiperiodic?");
    eq_opts(c);
    c->callback([&] {
      action = [&] {
        bool sp = is_superperiodic(equation_from(s, a_list, b_list));
        s.out() << "superperiodic: " << yes_no(sp) << "\n";
        return sp ? kOk : kVerificationFailed;
      };
    });
  }
  {
    auto* c = eq->add_subcommand("monodromy", "Product of the companion matrices over one period");
    eq_opts(c);
    c->callback([&] {
      action = [&] {
        auto e = equation_from(s, a_list, b_list);
        Matrix m = monodromy(e);
        bool minus_id = m == -Matrix::identity(4, e.kind());
        s.out() << m.str();
        s.out() << "monodromy = -Id: " << yes_no(minus_id) << "\n";
        s.out() << "superperiodic: " << yes_no(minus_id) << "\n";
        return minus_id ? kOk : kVerificationFailed;
      };
    });
  }
  {
    auto* c = eq->add_subcommand("variety", "Residuals of the ten polynomial equations");
    eq_opts(c);
    c->callback([&] {
      action = [&] {
        auto res = variety_residuals(equation_from(s, a_list, b_list));
        int status = kOk;
        for (size_t i = 0; i < res.size(); ++i) {
          s.out() << "residual " << i + 1 << ": " << res[i].str() << "\n";
          if (!res[i].is_zero()) status = kVerificationFailed;
        }
        s.out() << "on variety: " << yes_no(status == kOk) << "\n";
        return status;
      };
    });
  }

  // ---- sl ------------------------------------------------------------------
  auto* sl = app.add_subcommand("sl", "SL-frieze views and dualities");
  sl->require_subcommand(1);
  {
    auto* c = sl->add_subcommand("black", "Black subarray of a symplectic 2-frieze as an SL4-frieze");
    input_opt(c);
    format_opt(c);
    c->callback([&] {
      action = [&] {
        SLFrieze f = black_of(frieze_input(s));
        emit_sl(s, f);
        return report_sl(s, f, err);
      };
    });
  }
  {
    auto* c = sl->add_subcommand("to-symplectic", "Symplectic 2-frieze from an SL4-frieze (JSON)");
    input_opt(c);
    format_opt(c);
    c->callback([&] {
      action = [&] {
        s.emit_frieze(symplectic_of(sl_input(s)));
        return kOk;
      };
    });
  }
  {
    auto* c = sl->add_subcommand("dual", "Projective dual of an SL-frieze (JSON)");
    input_opt(c);
    format_opt(c);
    c->callback([&] {
      action = [&] {
        emit_sl(s, projective_dual(sl_input(s)));
        return kOk;
      };
    });
  }
  {
    auto* c = sl->add_subcommand("gale", "Gale dual of an SL-frieze (JSON)");
    input_opt(c);
    format_opt(c);
    c->callback([&] {
      action = [&] {
        SLFrieze g = gale_dual(sl_input(s));
        emit_sl(s, g);
        return report_sl(s, g, err);
      };
    });
  }

  // ---- cluster -------------------------------------------------------------
  auto* cl = app.add_subcommand("cluster", "Cluster structure of friezes");
  cl->require_subcommand(1);
  int width = 1;
  std::string matrix_text, sequence_text, point_text;
  bool show_cluster = false;
  {
    auto* c = cl->add_subcommand("belt", "Periodicity of the bipartite belt of C2 x A_w");
    c->add_option("--width", width)->required()->check(CLI::Range(1, 12));
    c->callback([&] {
      action = [&] {
        Seed start = initial_seed(c2_square_aw(width));
        Seed cur = start;
        const int expected = 2 * (width + 5);
        int period = 0;
        for (int step = 1; step <= expected; ++step) {
          cur = belt_step(belt_step(cur, BeltSign::Minus), BeltSign::Plus);
          if (same_seed(cur, start)) {
            period = step;
            break;
          }
        }
        s.out() << "width: " << width << "\n";
        s.out() << "belt period: " << (period ? std::to_string(period) : "none") << "\n";
        bool ok = period != 0 && expected % period == 0;
        s.out() << "(mu+ mu-)^" << expected << " = Id: " << yes_no(ok) << "\n";
        return ok ? kOk : kVerificationFailed;
      };
    });
  }
  {
    auto* c = cl->add_subcommand("mutate", "Mutate an exchange matrix or seed");
    c->add_option("--matrix", matrix_text, "JSON integer matrix; default C2 x A_w");
    c->add_option("--width", width, "w for the default matrix");
    c->add_option("--sequence", sequence_text, "1-based mutation indices, applied left to right");
    c->add_flag("--cluster", show_cluster, "Print the cluster variables too");
    c->callback([&] {
      action = [&] {
        ExchangeMatrix b = matrix_arg(matrix_text, width);
        auto seq = sequence_text.empty() ? std::vector<int>{} : parse_ints(sequence_text);
        Seed sd = apply_sequence(initial_seed(b), seq);
        s.out() << "matrix:\n" << sd.matrix.str();
        s.out() << "quiver:\n" << quiver_of(sd.matrix).str();
        if (show_cluster)
          for (size_t i = 0; i < sd.cluster.size(); ++i)
            s.out() << "x" << i + 1 << "' = " << sd.cluster[i].str() << "\n";
        return kOk;
      };
    });
  }
  {
    auto* c = cl->add_subcommand("formal", "Frieze with Laurent entries in the initial cluster");
    c->add_option("--width", width)->required()->check(CLI::Range(1, 6));
    c->callback([&] {
      action = [&] {
        FormalFrieze f = formal_frieze(width);
        for (int r = 0; r < f.width(); ++r)
          for (int x = 0; x < f.columns(); ++x)
            s.out() << index_str(GridIndex::at(r, x)) << " " << f.cell(r, x).str() << "\n";
        return kOk;
      };
    });
  }
  {
    auto* c = cl->add_subcommand("evaluate", "Evaluate the chart of a seed at a point");
    c->add_option("--width", width)->required()->check(CLI::Range(1, 12));
    c->add_option("--point", point_text, "2w values for the cluster variables")->required();
    c->add_option("--sequence", sequence_text, "Mutations from the initial seed, 1-based");
    format_opt(c);
    c->callback([&] {
      action = [&] {
        auto seq = sequence_text.empty() ? std::vector<int>{} : parse_ints(sequence_text);
        Seed chi = apply_sequence(initial_seed(c2_square_aw(width)), seq);
        s.emit_frieze(evaluate_frieze(chi, width, parse_list(point_text, s.kind())));
        return kOk;
      };
    });
  }

  // ---- polygon -------------------------------------------------------------
  auto* po = app.add_subcommand("polygon", "Legendrian polygons");
  po->require_subcommand(1);
  int anchor = 1;
  {
    auto* c = po->add_subcommand("from-frieze", "Normalized polygon read off a frieze");
    input_opt(c);
    c->add_option("--anchor", anchor, "Index i0 of the first vertex row");
    c->callback([&] {
      action = [&] {
        s.out() << polygon_to_json(polygon_from_frieze(frieze_input(s), anchor)).dump(2) << "\n";
        return kOk;
      };
    });
  }
  {
    auto* c = po->add_subcommand("to-frieze", "Frieze of pairings of a normalized polygon");
    input_opt(c);
    format_opt(c);
    c->callback([&] {
      action = [&] {
        Polygon p = polygon_from_json(parse_json(s.read_input()));
        check_normalized(p);
        s.emit_frieze(frieze_from_polygon(p));
        return kOk;
      };
    });
  }
  {
    auto* c = po->add_subcommand("normalize", "Rescale a lift so that consecutive pairings are 1");
    input_opt(c);
    c->callback([&] {
      action = [&] {
        Polygon p = normalize_lift(polygon_from_json(parse_json(s.read_input())));
        s.out() << polygon_to_json(p).dump(2) << "\n";
        return kOk;
      };
    });
  }
  {
    auto* c = po->add_subcommand("coeffs", "Coefficients of the equation satisfied by the vertices");
    input_opt(c);
    c->callback([&] {
      action = [&] {
        Coeffs cf = coeffs_from_polygon(polygon_from_json(parse_json(s.read_input())));
        s.out() << "a: " << join(cf.a) << "\n";
        s.out() << "b: " << join(cf.b) << "\n";
        return kOk;
      };
    });
  }

  // ---- search --------------------------------------------------------------
  auto* se = app.add_subcommand("search", "Positive integer friezes with bounded seed entries");
  se->require_subcommand(1);
  int bound = 5;
  unsigned threads = 1;
  std::string dedup = "none";
  bool list = false;
  auto search_opts = [&](CLI::App* c) {
    c->add_option("--width", width)->required()->check(CLI::Range(0, 8));
    c->add_option("--bound", bound, "Largest seed entry tried")->check(CLI::Range(1, 1000));
    c->add_option("--threads", threads, "Worker threads");
  };
  auto config = [&] {
    SearchConfig cfg;
    cfg.w = width;
    cfg.bound = bound;
    cfg.threads = threads;
    cfg.dedup = dedup_of(dedup);
    return cfg;
  };
  {
    auto* c = se->add_subcommand("enumerate", "Count friezes and their dihedral orbits");
    search_opts(c);
    c->add_option("--dedup", dedup, "none | translation | dihedral");
    c->add_flag("--list", list, "Print every frieze found");
    c->callback([&] {
      action = [&] {
        SearchConfig cfg = config();
        auto found = enumerate(cfg);
        auto orbits = dihedral_orbits(found);
        s.out() << "count: " << found.size() << ", orbits: " << orbits.size() << "\n";
        s.out() << "bound: " << bound << " (completeness assumes no seed entry exceeds it)\n";
        if (list)
          for (const auto& g : found) s.out() << render_text(g);
        return kOk;
      };
    });
  }
  {
    auto* c = se->add_subcommand("orbits", "Dihedral orbits with representatives");
    search_opts(c);
    c->callback([&] {
      action = [&] {
        auto found = enumerate(config());
        auto orbits = dihedral_orbits(found);
        s.out() << "count: " << found.size() << ", orbits: " << orbits.size() << "\n";
        s.out() << "bound: " << bound << "\n";
        for (size_t i = 0; i < orbits.size(); ++i) {
          s.out() << "orbit " << i + 1 << ": size " << orbits[i].members.size() << "\n";
          s.out() << render_text(orbits[i].representative);
        }
        return kOk;
      };
    });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const double old_tol = float_tolerance();
  set_float_tolerance(o.tolerance);
  int status = kUsageError;
  try {
    status = action ? action() : kUsageError;
    s.flush();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    status = kUsageError;
  } catch (const KindMismatch& e) {
    err << "parse error: " << e.what() << "\n";
    status = kUsageError;
  } catch (const DimensionError& e) {
    err << "usage error: " << e.what() << "\n";
    status = kUsageError;
  } catch (const Error& e) {
    err << "verification failed: " << e.what() << "\n";
    status = kVerificationFailed;
  }
  set_float_tolerance(old_tol);
  return status;
}

}  // namespace frieze::cli
