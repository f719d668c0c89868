#include <chainops/parse.hpp>
#include <chainops/verify.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace chainops;
using json = nlohmann::json;

namespace {

struct Config {
  std::string complex = "surj";
  std::string flavor = "bf";
  int n = 2;
  std::string ring = "Z";
  int p = 0;
  std::string format = "text";
  std::vector<std::string> inputs;

  Ring rng() const {
    if (p) return Ring::field(p);
    if (ring == "Z" || ring == "z") return Ring::integers();
    if (ring.size() > 1 && (ring[0] == 'F' || ring[0] == 'f')) {
      try {
        return Ring::field(std::stoi(ring.substr(1)));
      } catch (const std::logic_error&) {
      }
    }
    throw InvalidInput("ring must be Z or F<p>, got '" + ring + "'");
  }
  Flavor flav() const { return parse_flavor(flavor); }
  bool js() const { return format == "json"; }
};

struct VerifyOpts {
  std::vector<std::string> suites;
  int n = -1;
  int max_degree = -1;
  int jobs = 1;
  bool list = false;
};

std::string read_input(const std::string& s) {
  if (s != "-") return s;
  return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

std::string input(const Config& c, std::size_t i = 0) {
  if (c.inputs.size() <= i) throw InvalidInput("missing element argument");
  return read_input(c.inputs[i]);
}

json coeff_json(const Int& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

void warn(const Warnings& w) {
  for (const auto& s : w) std::cerr << "warning: " << s << "\n";
}

// prints an element in the chosen format
template <class G, class Show, class Js>
void emit(const Config& c, const Element<G>& x, const std::string& complex, int n, Show&& show, Js&& to_json) {
  if (!c.js()) {
    std::cout << format(x, show) << "\n";
    return;
  }
  json r;
  r["complex"] = complex;
  r["n"] = n;
  r["ring"] = x.ring.p ? json{{"kind", "Fp"}, {"p", x.ring.p}} : json{{"kind", "Z"}};
  r["degree"] = x.degree;
  r["terms"] = json::array();
  for (const auto& [g, k] : x.terms) r["terms"].push_back({{"coeff", coeff_json(k)}, {"gen", to_json(g)}});
  std::cout << r.dump() << "\n";
}

auto vec_str = [](const std::vector<int>& v) { return tuple_str(v); };
auto vec_json = [](const std::vector<int>& v) { return json(v); };

std::string surj_name(Flavor f, int n) { return "S^" + flavor_name(f) + "(" + std::to_string(n) + ")"; }

void emit_surj(const Config& c, const Element<Surj>& x, Flavor f, int n) {
  emit(c, x, surj_name(f, n), n, vec_str, vec_json);
}

void emit_eg(const Config& c, const Element<Tuple>& x, const Group& G) {
  EGComplex E(G);
  emit(c, x, "N(E" + G.name() + ")", G.n, [&](const Tuple& t) { return E.show(t); },
       [&](const Tuple& t) {
         json a = json::array();
         for (int g : t) a.push_back(G.perm(g));
         return a;
       });
}

void emit_m(const Config& c, const Element<MGen>& x, int n) {
  emit(c, x, "M(C" + std::to_string(n) + ")", n, show_mgen, [](const MGen& g) { return json{g.deg, g.pow}; });
}

template <class G, class S>
std::string tensor_str(const TGen<G>& t, S&& show) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "⊗" : "") + show(t[i]);
  return s;
}

void emit_face_tensor(const Config& c, const Element<TGen<Face>>& x, const std::string& complex, int n) {
  emit(c, x, complex, n, [](const TGen<Face>& t) { return tensor_str(t, vec_str); },
       [](const TGen<Face>& t) { return json(t); });
}

void emit_m_tensor(const Config& c, const Element<TGen<MGen>>& x, int n, int k) {
  emit(c, x, "M(C" + std::to_string(n) + ")^" + std::to_string(k), n,
       [](const TGen<MGen>& t) { return tensor_str(t, show_mgen); },
       [](const TGen<MGen>& t) {
         json a = json::array();
         for (const auto& g : t) a.push_back({g.deg, g.pow});
         return a;
       });
}

std::string points_str(const Points& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < p[i].size(); ++j) s += (j ? " " : "") + std::to_string(p[i][j]);
  }
  return s + ")";
}

void emit_points(const Config& c, const Element<Points>& x, int width) {
  emit(c, x, "N(product of " + std::to_string(width) + " simplices)", width, points_str,
       [](const Points& p) { return json(p); });
}

void emit_be(const Config& c, const Element<PermSeq>& x, int n) {
  BEFamily fam;
  emit(c, x, "E(" + std::to_string(n) + ")", n, [&](const PermSeq& s) { return fam.show(s); },
       [](const PermSeq& s) { return json(s); });
}

const Group& eg_group(const Config& c) {
  if (c.complex == "es") return sym_group(c.n);
  if (c.complex == "ec") return cyc_group(c.n);
  throw InvalidInput("complex must be es or ec here");
}

// boundary and contraction, one complex at a time
void run_dh(const Config& c, bool contract) {
  Ring R = c.rng();
  Warnings w;
  std::string text = input(c);
  if (c.complex == "surj") {
    SurjComplex S(c.n, c.flav(), R);
    auto x = parse_surj(text, c.n, R, &w);
    warn(w);
    emit_surj(c, contract ? apply_h(S, x) : apply_d(S, x), c.flav(), c.n);
  } else if (c.complex == "simplex") {
    SimplexComplex S(c.n, R);
    auto x = parse_face(text, c.n, R, &w);
    warn(w);
    emit(c, contract ? apply_h(S, x) : apply_d(S, x), "N(Delta^" + std::to_string(c.n) + ")", c.n, vec_str, vec_json);
  } else if (c.complex == "es" || c.complex == "ec") {
    const Group& G = eg_group(c);
    EGComplex E(G, R);
    auto x = parse_eg(text, G, R, &w);
    warn(w);
    emit_eg(c, contract ? apply_h(E, x) : apply_d(E, x), G);
  } else if (c.complex == "minimal") {
    MinimalComplex M(c.n, R);
    auto x = parse_mgen(text, c.n, R);
    emit_m(c, contract ? apply_h(M, x) : apply_d(M, x), c.n);
  } else if (c.complex == "be") {
    BEFamily fam{R};
    auto x = parse_be(text, R, &w);
    warn(w);
    Element<PermSeq> r(R, x.degree + (contract ? 1 : -1));
    for (const auto& [g, k] : x.terms) r.add(contract ? fam.h(g) : fam.d(g), k);
    emit_be(c, r, be_arity(x));
  } else {
    throw InvalidInput("unknown complex '" + c.complex + "'");
  }
}

void run_act(const Config& c, const std::string& gtext) {
  Ring R = c.rng();
  Warnings w;
  std::string text = input(c);
  auto is_int = !gtext.empty() && gtext.find('(') == std::string::npos;
  if (c.complex == "surj") {
    auto x = parse_surj(text, c.n, R, &w);
    warn(w);
    Perm g = parse_perm(gtext);
    if ((int)g.size() != c.n) throw InvalidInput("permutation size differs from n");
    emit_surj(c, SurjComplex(c.n, c.flav(), R).act(g, x), c.flav(), c.n);
  } else if (c.complex == "es" || c.complex == "ec") {
    const Group& G = eg_group(c);
    auto x = parse_eg(text, G, R, &w);
    warn(w);
    int code = 0;
    if (is_int && G.kind == Group::Kind::Cyc)
      code = ((std::stoi(gtext) % G.n) + G.n) % G.n;
    else
      code = G.code(parse_perm(gtext));
    emit_eg(c, EGComplex(G, R).act(code, x), G);
  } else if (c.complex == "minimal") {
    if (!is_int) throw InvalidInput("for M give the power of T as an integer");
    auto x = parse_mgen(text, c.n, R);
    emit_m(c, MinimalComplex(c.n, R).act(std::stoi(gtext), x), c.n);
  } else if (c.complex == "be") {
    auto x = parse_be(text, R, &w);
    warn(w);
    Perm g = parse_perm(gtext);
    emit_be(c, BEFamily{R}.act(g, x), (int)g.size());
  } else {
    throw InvalidInput("no group action on complex '" + c.complex + "'");
  }
}

int surj_text_arity(const std::string& text) {
  int n = 0;
  for (const auto& t : parse_raw(text))
    for (const auto& g : t.factors)
      for (const auto& gr : g.groups)
        for (int a : gr) n = std::max(n, a);
  if (n < 1) throw InvalidInput("cannot infer the arity of '" + text + "'");
  return n;
}

Cochain load_cochain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  Cochain a;
  a.q = j.at("degree").get<int>();
  for (const auto& [id, v] : j.at("values").items()) a.values[id] = Int(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()));
  return a;
}

FaceTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  FaceTable X;
  try {
    json j = json::parse(in);
    for (const auto& s : j.at("simplices")) {
      FaceTable::Simplex t;
      t.dim = s.at("dim").get<int>();
      if (s.contains("faces")) t.faces = s.at("faces").get<std::vector<std::string>>();
      if (t.dim > 0 && (int)t.faces.size() != t.dim + 1)
        throw InvalidInput(path + ": simplex " + s.at("id").get<std::string>() + " needs dim + 1 faces");
      X.simplices[s.at("id").get<std::string>()] = t;
    }
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return X;
}

int run_verify(const Config& c, const VerifyOpts& v) {
  if (v.list) {
    for (const auto& s : all_suites()) std::cout << s.name << "  " << s.summary << "\n";
    return 0;
  }
  std::vector<std::string> names = v.suites;
  if (names.empty())
    for (const auto& s : all_suites()) names.push_back(s.name);
  SuiteOptions o{v.n, v.max_degree};
  bool ok = true;
  json out = json::array();
  for (const auto& name : names) {
    const Suite& s = find_suite(name);
    auto reps = run_tasks(s.tasks(o), v.jobs);
    json rs = json::array();
    for (const auto& r : reps) {
      ok = ok && r.ok;
      if (c.js())
        rs.push_back({{"name", r.name}, {"ok", r.ok}, {"checked", r.checked}, {"failure", r.failure}});
      else
        std::cout << (r.ok ? "ok   " : "FAIL ") << s.name << ": " << r.name << " (" << r.checked << " checks)"
                  << (r.ok ? "" : " first counterexample: " + r.failure) << "\n";
    }
    out.push_back({{"suite", s.name}, {"reports", rs}});
  }
  if (c.js()) std::cout << json{{"ok", ok}, {"suites", out}}.dump() << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chainops: exact chain-level operations on contracted complexes"};
  app.require_subcommand(1);
  Config c;
  auto common = [&](CLI::App* s, bool complex = true) {
    if (complex)
      s->add_option("--complex", c.complex, "surj, simplex, es, ec, minimal or be")->capture_default_str();
    s->add_option("--flavor", c.flavor, "surjection sign flavor: aj, bf or ms")->capture_default_str();
    s->add_option("--n", c.n, "arity, group degree or simplex dimension")->capture_default_str();
    s->add_option("--ring", c.ring, "Z or F<p>")->capture_default_str();
    s->add_option("--p", c.p, "shorthand for --ring F<p>");
    s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    s->add_option("element", c.inputs, "element expressions, '-' reads stdin");
  };

  auto* boundary = app.add_subcommand("boundary", "apply the differential");
  common(boundary);
  auto* contract = app.add_subcommand("contract", "apply the contraction h");
  common(contract);

  std::string gtext;
  auto* act = app.add_subcommand("act", "left action of a group element");
  common(act);
  act->add_option("--g", gtext, "permutation, or a power of T for cyclic groups")->required();

  std::string from = "bf", to = "ms";
  auto* isoc = app.add_subcommand("iso", "isomorphism between surjection flavors");
  common(isoc, false);
  isoc->add_option("--from", from)->capture_default_str();
  isoc->add_option("--to", to)->capture_default_str();

  auto* tr = app.add_subcommand("tr", "table reduction N(E S_n) -> S(n)");
  common(tr, false);
  auto* pr = app.add_subcommand("pr", "prism map S(n) -> N(E S_n)");
  common(pr, false);
  auto* aw = app.add_subcommand("aw", "Alexander-Whitney map on a product of simplices");
  common(aw, false);
  auto* ez = app.add_subcommand("ez", "Eilenberg-Zilber shuffle map of a tensor of faces");
  common(ez, false);

  int k = 2;
  auto* diag = app.add_subcommand("diagonal", "iterated diagonal on N(Delta^n) or M");
  common(diag);
  diag->add_option("--k", k, "number of tensor factors")->capture_default_str();

  auto* phim = app.add_subcommand("phi-M", "M -> N(E C_n)");
  common(phim, false);
  auto* pim = app.add_subcommand("pi-M", "N(E C_n) -> M");
  common(pim, false);
  int ell = 1;
  auto* lam = app.add_subcommand("lambda", "the power map lambda_l on M");
  common(lam, false);
  lam->add_option("--l", ell)->required();

  std::string operad = "surj";
  auto* comp = app.add_subcommand("compose", "operad composition O(x; y_1, ..., y_r)");
  common(comp, false);
  comp->add_option("--operad", operad, "surj or be")->capture_default_str();
  int slot = 1;
  auto* pcomp = app.add_subcommand("partial-compose", "partial composition x o_i y");
  common(pcomp, false);
  pcomp->add_option("--operad", operad, "surj or be")->capture_default_str();
  pcomp->add_option("--i", slot)->required();

  int m = 0;
  auto* bfa = app.add_subcommand("bf-action", "action on the standard simplex, x (x) Delta^m");
  common(bfa);
  bfa->add_option("--m", m)->required();

  std::string table, simplex;
  std::vector<std::string> cochains;
  auto* ev = app.add_subcommand("eval-cochain", "cochain operation of a surjection");
  common(ev, false);
  ev->add_option("--table", table, "face table JSON; the standard simplex of dimension --dim if omitted");
  int dim = -1;
  ev->add_option("--dim", dim);
  ev->add_option("--cochain", cochains, "cochain JSON files, one per input")->required()->allow_extra_args(false);
  ev->add_option("--simplex", simplex, "evaluate on this simplex only");

  int cp = 3;
  auto* cst = app.add_subcommand("constant", "the constant c_{m,p}");
  cst->add_option("--m", m)->required();
  cst->add_option("--p", cp)->required();

  VerifyOpts vo;
  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", vo.suites, "suite names (default all)")->delimiter(',');
  ver->add_option("--n", vo.n);
  ver->add_option("--max-degree", vo.max_degree);
  ver->add_option("--jobs", vo.jobs)->check(CLI::PositiveNumber);
  ver->add_flag("--list", vo.list);
  ver->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    Ring R = ver->parsed() || cst->parsed() ? Ring{} : c.rng();
    Warnings w;
    if (boundary->parsed()) run_dh(c, false);
    if (contract->parsed()) run_dh(c, true);
    if (act->parsed()) run_act(c, gtext);
    if (isoc->parsed()) {
      Flavor a = parse_flavor(from), b = parse_flavor(to);
      auto x = parse_surj(input(c), c.n, R, &w);
      warn(w);
      emit_surj(c, iso(a, b, x), b, c.n);
    }
    if (tr->parsed()) {
      const Group& S = sym_group(c.n);
      auto x = parse_eg(input(c), S, R, &w);
      warn(w);
      emit_surj(c, table_reduction(c.flav(), S, x), c.flav(), c.n);
    }
    if (pr->parsed()) {
      const Group& S = sym_group(c.n);
      auto x = parse_surj(input(c), c.n, R, &w);
      warn(w);
      emit_eg(c, prism_map(c.flav(), S, x), S);
    }
    if (aw->parsed()) {
      auto x = parse_points(input(c), R, &w);
      warn(w);
      Element<TGen<std::vector<int>>> r(R, x.degree);
      int width = 0;
      for (const auto& [p, a] : x.terms) {
        width = (int)p[0].size();
        r.add(aw_points(p, R), a);
      }
      emit_face_tensor(c, r, "tensor of " + std::to_string(width) + " simplices", width);
    }
    if (ez->parsed()) {
      auto x = parse_face_tensor(input(c), 1 << 20, R, &w);
      warn(w);
      Element<Points> r(R, x.degree);
      int width = 0;
      for (const auto& [t, a] : x.terms) {
        width = (int)t.size();
        r.add(ez_points(t, R), a);
      }
      emit_points(c, r, width);
    }
    if (diag->parsed()) {
      if (c.complex == "simplex") {
        auto x = parse_face(input(c), c.n, R, &w);
        warn(w);
        Element<TGen<Face>> r(R, x.degree);
        for (const auto& [f, a] : x.terms) r.add(multidiagonal(k, f, R), a);
        emit_face_tensor(c, r, "N(Delta^" + std::to_string(c.n) + ")^" + std::to_string(k), c.n);
      } else if (c.complex == "minimal") {
        auto x = parse_mgen(input(c), c.n, R);
        Element<TGen<MGen>> r(R, x.degree);
        for (const auto& [g, a] : x.terms) r.add(multidiagonal_M(c.n, k, g, R), a);
        emit_m_tensor(c, r, c.n, k);
      } else {
        throw InvalidInput("diagonal is available on simplex and minimal");
      }
    }
    if (phim->parsed()) emit_eg(c, phi_M(c.n, parse_mgen(input(c), c.n, R)), cyc_group(c.n));
    if (pim->parsed()) {
      auto x = parse_eg(input(c), cyc_group(c.n), R, &w);
      warn(w);
      emit_m(c, pi_M(c.n, x), c.n);
    }
    if (lam->parsed()) emit_m(c, lambda_M(c.n, ell, parse_mgen(input(c), c.n, R)), c.n);
    if (comp->parsed() || pcomp->parsed()) {
      bool partial = pcomp->parsed();
      if (c.inputs.size() < 2) throw InvalidInput("need x and at least one y");
      if (partial && c.inputs.size() != 2) throw InvalidInput("partial composition takes exactly x and y");
      if (operad == "surj") {
        Flavor f = c.flav();
        std::vector<Element<Surj>> xs;
        int total = 0;
        for (std::size_t i = 0; i < c.inputs.size(); ++i) {
          std::string t = read_input(c.inputs[i]);
          int a = surj_text_arity(t);
          xs.push_back(parse_surj(t, a, R, &w));
          if (i) total += a;
        }
        warn(w);
        int r = surj_text_arity(read_input(c.inputs[0]));
        Element<Surj> out(R, 0);
        if (partial) {
          out = multilinear<Surj>(xs, [&](const TGen<Surj>& t) { return partial_compose(f, slot, t[0], t[1], R); }, R);
          total = r - 1 + surj_text_arity(read_input(c.inputs[1]));
        } else {
          if ((int)xs.size() != r + 1) throw InvalidInput("x has arity " + std::to_string(r) + " but " + std::to_string(xs.size() - 1) + " inputs were given");
          out = multilinear<Surj>(
              xs, [&](const TGen<Surj>& t) { return surj_compose(f, t[0], std::vector<Surj>(t.begin() + 1, t.end()), R); },
              R);
        }
        emit_surj(c, out, f, total);
      } else if (operad == "be") {
        std::vector<Element<PermSeq>> xs;
        int total = 0;
        for (std::size_t i = 0; i < c.inputs.size(); ++i) {
          xs.push_back(parse_be(read_input(c.inputs[i]), R, &w));
          if (i) total += be_arity(xs.back());
        }
        warn(w);
        int r = be_arity(xs[0]);
        if (partial) {
          if (slot < 1 || slot > r) throw InvalidInput("slot out of range");
          int s = be_arity(xs[1]);
          std::vector<Element<PermSeq>> full{xs[0]};
          for (int i = 1; i <= r; ++i)
            full.push_back(i == slot ? xs[1] : Element<PermSeq>::single(R, 0, PermSeq{identity_perm(1)}));
          xs = full;
          total = r - 1 + s;
        } else if ((int)xs.size() != r + 1) {
          throw InvalidInput("x has arity " + std::to_string(r) + " but " + std::to_string(xs.size() - 1) + " inputs were given");
        }
        auto out = multilinear<PermSeq>(
            xs, [&](const TGen<PermSeq>& t) { return be_compose(t[0], std::vector<PermSeq>(t.begin() + 1, t.end()), R); },
            R);
        emit_be(c, out, total);
      } else {
        throw InvalidInput("operad must be surj or be");
      }
    }
    if (bfa->parsed()) {
      if (m < 0) throw InvalidInput("m must be >= 0");
      Element<SimplexTensor> r;
      int n = c.n;
      if (c.complex == "surj") {
        auto x = parse_surj(input(c), c.n, R, &w);
        warn(w);
        r = action_surj(c.flav(), x, m);
      } else if (c.complex == "es") {
        auto x = parse_eg(input(c), sym_group(c.n), R, &w);
        warn(w);
        r = action_ES(sym_group(c.n), x, m);
      } else if (c.complex == "minimal") {
        if (!is_prime(c.n) || c.n < 3) throw InvalidInput("the M route needs --n an odd prime");
        auto x = parse_mgen(input(c), c.n, R);
        r = Element<SimplexTensor>(Ring::field(c.n), x.degree + m);
        for (const auto& [g, a] : x.terms) r.add(action_M(c.n, g, m), a);
      } else {
        throw InvalidInput("bf-action takes surj, es or minimal elements");
      }
      emit_face_tensor(c, r, "N(Delta^" + std::to_string(m) + ")^" + std::to_string(n), n);
    }
    if (ev->parsed()) {
      FaceTable X;
      if (!table.empty())
        X = load_table(table);
      else if (dim >= 0)
        X = simplex_face_table(dim);
      else
        throw InvalidInput("give --table or --dim");
      std::string t = input(c);
      int n = surj_text_arity(t);
      auto x = parse_surj(t, n, R, &w);
      warn(w);
      std::vector<Cochain> al;
      for (const auto& f : cochains) al.push_back(load_cochain(f));
      if ((int)al.size() != n) throw InvalidInput("need " + std::to_string(n) + " cochains");
      int total = 0;
      for (const auto& a : al) total += a.q;
      if (!simplex.empty()) {
        if (!X.find(simplex)) throw InvalidInput("unknown simplex '" + simplex + "'");
        Int v = 0;
        for (const auto& [g, a] : x.terms) v += a * cochain_evaluate(g, al, X, simplex, R);
        v = R.norm(v);
        if (c.js())
          std::cout << json{{"simplex", simplex}, {"value", coeff_json(v)}}.dump() << "\n";
        else
          std::cout << v << "\n";
      } else {
        std::map<std::string, Int> vals;
        for (const auto& [g, a] : x.terms)
          for (const auto& [id, v] : cochain_operation(g, al, X, R).values) vals[id] += a * v;
        json j{{"degree", total - x.degree}, {"values", json::object()}};
        for (auto& [id, v] : vals) {
          R.reduce(v);
          if (v != 0) j["values"][id] = coeff_json(v);
        }
        if (c.js()) {
          std::cout << j.dump() << "\n";
        } else {
          bool any = false;
          for (const auto& [id, v] : vals)
            if (v != 0) {
              std::cout << id << " " << v << "\n";
              any = true;
            }
          if (!any) std::cout << "0\n";
        }
      }
    }
    if (cst->parsed()) std::cout << steenrod_constant(m, cp) << "\n";
    if (ver->parsed()) return run_verify(c, vo);
  } catch (const GuardTripped& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
