#include "bhk/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bhk/invertible.hpp"
#include "bhk/report.hpp"

namespace bhk {

namespace {

struct Options {
  std::string verb;
  std::string poly_a, poly_b, matrix_a, matrix_b;
  std::string group = "J";
  std::string b, c = "0";
  std::string json_path;
  std::string replay_path;
  std::string example;
  bool verbose = false;
  bool timing = false;
  bool dot = false;
  std::size_t max_spairs = GroebnerOptions{}.max_spairs;
  std::size_t max_terms = GroebnerOptions{}.max_terms;
};

// Text plus the same content as JSON.
struct Output {
  std::ostringstream text;
  Json json = Json::object();
  int code = kExitOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  auto trimmed = s;
  std::erase_if(trimmed, [](char ch) { return ch == ' '; });
  if (trimmed.empty() || r.set_str(trimmed, 10) != 0 || r.get_den() == 0)
    throw Error(ErrorCode::InvalidArgument, "not a rational number: '" + s + "'");
  r.canonicalize();
  return r;
}

RatVector parse_rationals(const std::string& csv) {
  RatVector out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_rational(item));
  return out;
}

InvertiblePolynomial load(const std::string& poly, const std::string& matrix,
                          const char* which) {
  if (!poly.empty() && !matrix.empty())
    throw Error(ErrorCode::InvalidArgument,
                std::string("give either a polynomial or a matrix for ") + which);
  if (!poly.empty())
    return parse_polynomial(read_file(poly));
  if (!matrix.empty())
    return InvertiblePolynomial(parse_matrix(read_file(matrix)));
  throw Error(ErrorCode::InvalidArgument, std::string("missing input ") + which);
}

InvertiblePolynomial load_a(const Options& o) { return load(o.poly_a, o.matrix_a, "A"); }
InvertiblePolynomial load_b(const Options& o) { return load(o.poly_b, o.matrix_b, "B"); }

DiagonalGroup resolve_group(const std::string& spec, const IntMatrix& a) {
  if (spec == "J")
    return j_group(a);
  if (spec == "SL")
    return sl_group(a);
  if (spec.starts_with("@"))
    return parse_group(a.rows(), read_file(spec.substr(1)));
  throw Error(ErrorCode::InvalidArgument, "--group expects J, SL or @FILE");
}

Json group_json(const DiagonalGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) {
    Json row = Json::array();
    for (const auto& x : p)
      row.push_back(x.get_str());
    gens.push_back(std::move(row));
  }
  return {{"order", g.order().get_str()}, {"generators", std::move(gens)}};
}

std::string weights_text(const WeightSystem& w) {
  std::string s = "P(";
  for (std::size_t i = 0; i < w.q.size(); ++i)
    s += (i ? "," : "") + w.q[i].get_str();
  return s + ")";
}

// "P(1,1,1) / Z_3", or just the weights when G^T = J.
std::string ambient_text(const MirrorData& m) {
  auto q = group_quotient_structure(m.dual, j_group(m.transpose)).structure;
  auto s = weights_text(m.weights);
  return m.quotient_order == 1 ? s : s + " / " + q.to_string();
}

Json weights_json(const WeightSystem& w) {
  Json q = Json::array();
  for (const auto& x : w.q)
    q.push_back(x.get_str());
  return {{"q", std::move(q)}, {"d", w.d.get_str()}};
}

std::string join_names(const std::vector<std::size_t>& idx,
                       const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i)
    s += (i ? "," : "") + names[idx[i]];
  return s + "}";
}

std::string ideal_text(const MonomialIdeal& m, const Ring& r) {
  std::string s = "<";
  auto gens = m.to_strings(r);
  for (std::size_t i = 0; i < gens.size(); ++i)
    s += (i ? ", " : "") + gens[i];
  return s + ">";
}

std::string index_text(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// ---- verbs ----

void do_classify(const Options& o, Output& out) {
  auto p = normalize_rows(load_a(o));
  auto dec = classify(p);
  out.text << "polynomial: " << format_polynomial(p) << "\n";
  out.text << "atomic types: " << dec.to_string() << "\n";
  out.text << "calabi-yau: " << (is_calabi_yau(p.A) ? "yes" : "no") << "\n";
  out.json["polynomial"] = format_polynomial(p);
  out.json["atomic_types"] = dec.to_string();
  out.json["calabi_yau"] = is_calabi_yau(p.A);
  auto dot = diagram(p).to_dot();
  out.json["diagram"] = dot;
  if (o.dot)
    out.text << dot;
}

void do_weights(const Options& o, Output& out) {
  auto p = load_a(o);
  auto w = positive_weight_solve(p.A);
  out.text << "weights: " << w.to_string() << "\n";
  out.text << "calabi-yau index: " << calabi_yau_index(p.A).get_str() << "\n";
  out.json["weights"] = weights_json(w);
  out.json["calabi_yau_index"] = calabi_yau_index(p.A).get_str();
}

void do_transpose(const Options& o, Output& out) {
  auto t = transpose(normalize_rows(load_a(o)));
  out.text << format_polynomial(t) << "\n";
  out.json["transpose"] = format_polynomial(t);
}

void do_groups(const Options& o, Output& out) {
  auto p = normalize_rows(load_a(o));
  auto aut = aut_diag(p.A), sl = sl_group(p.A), j = j_group(p.A);
  auto g = resolve_group(o.group, p.A);
  if (!aut.contains(g))
    throw Error(ErrorCode::NotSubgroup, "G is not a group of diagonal symmetries");
  if (!g.contains(j))
    throw Error(ErrorCode::NotSubgroup, "G does not contain J");
  out.text << "|Aut| = " << aut.order().get_str() << "\n";
  out.text << "|SL| = " << sl.order().get_str() << "\n";
  out.text << "|J| = " << j.order().get_str() << "\n";
  out.text << "|G| = " << g.order().get_str() << "\n";
  auto q = group_quotient_structure(g, j).structure.to_string();
  out.text << "G/J = " << q << "\n";
  out.text << "G inside SL: " << (sl.contains(g) ? "yes" : "no") << "\n";
  out.json["aut"] = group_json(aut);
  out.json["sl"] = group_json(sl);
  out.json["j"] = group_json(j);
  out.json["g"] = group_json(g);
  out.json["g_mod_j"] = q;
}

void do_dual_group(const Options& o, Output& out) {
  auto p = normalize_rows(load_a(o));
  auto g = resolve_group(o.group, p.A);
  auto d = dual_group(p.A, g);
  out.text << "|G^T| = " << d.order().get_str() << "\n" << format_group(d);
  out.json["dual_group"] = group_json(d);
}

void do_gorenstein(const Options& o, Output& out) {
  auto p = normalize_rows(load_a(o));
  auto g = resolve_group(o.group, p.A);
  auto w = positive_weight_solve(p.A);
  bool gor = is_gorenstein(w, g);
  out.text << weights_text(w) << "/G: " << (gor ? "gorenstein" : "not gorenstein") << "\n";
  out.json["weights"] = weights_json(w);
  out.json["gorenstein"] = gor;
}

void mirror_lines(const MirrorData& m, std::ostream& os, const std::string& indent) {
  os << indent << "transpose: " << format_polynomial(InvertiblePolynomial(m.transpose))
     << "\n";
  os << indent << "ambient: " << ambient_text(m) << ", degree " << m.weights.d
     << "\n";
  os << indent << "|G^T| = " << m.dual.order() << ", |G^T/J| = " << m.quotient_order
     << "\n";
  os << indent << "gorenstein: " << (m.gorenstein ? "yes" : "no") << "\n";
}

Json mirror_json(const MirrorData& m) {
  return {{"transpose", format_polynomial(InvertiblePolynomial(m.transpose))},
          {"weights", weights_json(m.weights)},
          {"dual_group", group_json(m.dual)},
          {"quotient_order", m.quotient_order.get_str()},
          {"gorenstein", m.gorenstein}};
}

void do_mirror(const Options& o, Output& out) {
  auto p = normalize_rows(load_a(o));
  auto m = bhk_mirror(p.A, resolve_group(o.group, p.A));
  mirror_lines(m, out.text, "");
  out.json["mirror"] = mirror_json(m);
}

void cleave_lines(const std::vector<Cleave>& seq, Output& out) {
  Json links = Json::array();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& cl = seq[i];
    auto from = format_polynomial(InvertiblePolynomial(cl.A));
    auto to = format_polynomial(InvertiblePolynomial(cl.A2));
    out.text << i + 1 << ". " << from << "  ->  " << to << "  (k = " << cl.k << ", "
             << to_string(cl.direction) << ", index set " << index_text(cl.index_set)
             << ")\n";
    links.push_back({{"from", from},
                     {"to", to},
                     {"k", cl.k},
                     {"direction", std::string(to_string(cl.direction))},
                     {"index_set", cl.index_set}});
  }
  if (seq.empty())
    out.text << "no cleaves needed\n";
  out.json["cleaves"] = std::move(links);
}

void do_cleave_path(const Options& o, Output& out) {
  auto a = normalize_rows(load_a(o));
  auto g = resolve_group(o.group, a.A);
  if (o.poly_b.empty() && o.matrix_b.empty())
    cleave_lines(cleave_to_fermat(a.A, g), out);
  else
    cleave_lines(connect(a.A, normalize_rows(load_b(o)).A, g), out);
}

PipelineOptions pipeline_options(const Options& o) {
  PipelineOptions p;
  p.groebner.max_spairs = o.max_spairs;
  p.groebner.max_terms = o.max_terms;
  return p;
}

void link_lines(const CleaveCertificate& l, bool verbose, std::ostream& os) {
  Ring r = l.nu.ring();
  os << "  k = " << l.cleave.k << ", " << to_string(l.cleave.direction) << ": "
     << to_string(l.status) << "\n";
  for (const auto& w : l.warnings)
    os << "    warning: " << w << "\n";
  if (!verbose)
    return;
  os << "    A  = " << format_polynomial(InvertiblePolynomial(l.cleave.A)) << "\n";
  os << "    A' = " << format_polynomial(InvertiblePolynomial(l.cleave.A2)) << "\n";
  os << "    T  volumes ok: " << (l.check_T.ok ? "yes" : "no") << ", total "
     << l.check_T.total << "\n";
  os << "    T' volumes ok: " << (l.check_T2.ok ? "yes" : "no") << ", total "
     << l.check_T2.total << "\n";
  os << "    I_p = " << ideal_text(l.p.I, r) << "\n";
  os << "    J_p = " << ideal_text(l.p.J, r) << "\n";
  os << "    I_q = " << ideal_text(l.q.I, r) << "\n";
  os << "    J_q = " << ideal_text(l.q.J, r) << "\n";
  os << "    w_p = " << l.w_p.to_string(r) << "\n";
  os << "    w_q = " << l.w_q.to_string(r) << "\n";
  for (const auto& [name, s] : {std::pair{"p", &l.p}, std::pair{"q", &l.q}}) {
    os << "    containment " << name << ": " << (s->contained ? "yes" : "no");
    if (s->fast_path)
      os << " (structured, range " << index_text(s->propagation_range) << ")";
    else if (s->oracle && s->oracle->contained)
      os << " (groebner only)";
    os << "\n";
  }
}

int do_replay(const Options& o, Output& out) {
  Json report;
  try {
    report = Json::parse(read_file(o.replay_path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("report is not JSON: ") + e.what());
  }
  ReplaySummary s;
  try {
    s = replay_report(report);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
  out.text << "replayed " << s.replayed << " certificates, " << s.failed << " failed\n";
  out.json["replayed"] = s.replayed;
  out.json["failed"] = s.failed;
  return s.ok() ? kExitOk : kExitNotCertified;
}

int do_verify(const Options& o, Output& out) {
  if (!o.replay_path.empty())
    return do_replay(o, out);
  auto a = normalize_rows(load_a(o));
  auto b2 = normalize_rows(load_b(o));
  auto g = resolve_group(o.group, a.A);
  RatVector b = o.b.empty() ? RatVector(a.size(), Rational(1)) : parse_rationals(o.b);
  Rational c = parse_rational(o.c);
  auto start = std::chrono::steady_clock::now();
  auto report = verify_equivalence(a.A, b2.A, g, b, c, pipeline_options(o));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.text << "A  = " << format_polynomial(InvertiblePolynomial(report.A)) << "\n";
  out.text << "A' = " << format_polynomial(InvertiblePolynomial(report.A2)) << "\n";
  out.text << "|G| = " << g.order() << ", links: " << report.links.size() << "\n";
  for (const auto& l : report.links)
    link_lines(l, o.verbose, out.text);
  for (const auto& n : report.notes)
    out.text << "note: " << n << "\n";
  out.text << "status: " << to_string(report.status) << "\n";
  if (o.timing)
    out.text << "seconds: " << secs << "\n";
  out.json = report_to_json(report, o.timing ? std::optional<double>(secs) : std::nullopt);
  return report.status == LinkStatus::Equivalent ? kExitOk : kExitNotCertified;
}

// ---- built-in examples ----

const IntMatrix& quintic_matrix() {
  static const IntMatrix m{{5, 0, 0, 0, 0}, {0, 5, 0, 0, 0}, {0, 0, 5, 0, 0},
                           {0, 0, 0, 5, 0}, {0, 0, 0, 0, 5}};
  return m;
}

const IntMatrix& chain_matrix() {
  static const IntMatrix m{{4, 1, 0, 0, 0}, {0, 4, 1, 0, 0}, {0, 0, 4, 1, 0},
                           {0, 0, 0, 4, 1}, {0, 0, 0, 0, 5}};
  return m;
}

void example_quintic(Output& out) {
  const auto& a = quintic_matrix();
  auto w = positive_weight_solve(a);
  auto aut = aut_diag(a), sl = sl_group(a), j = j_group(a);
  auto dual = dual_group(a, j);
  auto q = group_quotient_structure(sl, j).structure.to_string();
  auto& os = out.text;
  os << "quintic: " << format_polynomial(InvertiblePolynomial(a)) << "\n";
  os << "weights: " << w.to_string() << "\n";
  os << "|Aut| = " << aut.order() << ", |SL| = " << sl.order() << ", |J| = " << j.order()
     << "\n";
  os << "dual of J: " << (dual == sl ? "SL" : dual.to_string()) << "\n";
  os << "SL/J = " << q << "\n";
  out.json = {{"polynomial", format_polynomial(InvertiblePolynomial(a))},
              {"weights", weights_json(w)},
              {"aut_order", aut.order().get_str()},
              {"sl_order", sl.order().get_str()},
              {"j_order", j.order().get_str()},
              {"dual_of_j_is_sl", dual == sl},
              {"sl_mod_j", q}};
}

void example_chain(Output& out) {
  const auto& a = chain_matrix();
  auto g = j_group(a);
  auto m = bhk_mirror(a, g);
  auto& os = out.text;
  os << "chain: " << format_polynomial(InvertiblePolynomial(a)) << "\n";
  os << "weights: " << positive_weight_solve(a).to_string() << "\n";
  os << "mirror with G = J:\n";
  mirror_lines(m, os, "  ");
  Output path;
  cleave_lines(cleave_to_fermat(a, g), path);
  os << "cleaves to the Fermat quintic:\n" << path.text.str();
  os << diagram(a).to_dot();
  out.json = {{"polynomial", format_polynomial(InvertiblePolynomial(a))},
              {"mirror", mirror_json(m)},
              {"cleaves", path.json["cleaves"]},
              {"diagram", diagram(a).to_dot()}};
}

void example_cubic(Output& out) {
  const IntMatrix chain{{3, 0, 0}, {0, 2, 1}, {0, 0, 3}};
  const IntMatrix fermat{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}};
  auto cl = *detect_cleave(chain, fermat).cleave;
  auto g = j_group(chain);
  RatVector ones(3, Rational(1));
  auto pencil = verify_cleave(cl, g, ones, 1);
  const auto& nu = pencil.nu;
  Ring r = nu.ring();
  auto& os = out.text;
  os << "A  = " << format_polynomial(InvertiblePolynomial(cl.A)) << "\n";
  os << "A' = " << format_polynomial(InvertiblePolynomial(cl.A2)) << "\n";
  os << "cleave: k = " << cl.k << ", " << to_string(cl.direction) << ", index set "
     << index_text(cl.index_set) << "\n";
  os << "nu:\n";
  for (std::size_t i = 0; i < nu.size(); ++i) {
    os << "  " << nu.names[i] << " = (";
    for (std::size_t j = 0; j < nu.points[i].size(); ++j)
      os << (j ? "," : "") << nu.points[i][j];
    os << ")  " << to_string(nu.roles[i]) << "\n";
  }
  auto simplices = [&](const Triangulation& t) {
    std::string s;
    for (const auto& simplex : t.simplices)
      s += " " + join_names(simplex, nu.names);
    return s;
  };
  os << "T: " << simplices(pencil.T) << "\n";
  os << "T':" << simplices(pencil.T2) << "\n";
  os << "I_p = " << ideal_text(pencil.p.I, r) << "\n";
  os << "J_p = " << ideal_text(pencil.p.J, r) << "\n";
  os << "I_q = " << ideal_text(pencil.q.I, r) << "\n";
  os << "J_q = " << ideal_text(pencil.q.J, r) << "\n";
  os << "w   = " << pencil.w.to_string(r) << "    (b = 1, c = 1)\n";
  os << "w_p = " << pencil.w_p.to_string(r) << "\n";
  os << "w_q = " << pencil.w_q.to_string(r) << "\n";
  const auto& fp = pencil.p.fast_path->front().steps.front();
  os << "d/d" << r.name(*std::ranges::find_if(
                     std::views::iota(std::size_t{0}, nu.size()),
                     [&](std::size_t v) {
                       return pencil.w.derivative(v) ==
                              pencil.p.ideal.generators[fp.generator];
                     }))
     << " w leaves " << format_monomial(fp.survivor, r) << ", so "
     << format_monomial(fp.derived, r) << " is in the radical\n";
  auto mirror = verify_cleave(cl, g, ones, 0);
  os << "c = 0: w_p = " << mirror.w_p.to_string(r) << ", w_q = " << mirror.w_q.to_string(r)
     << "\n";
  auto degen = verify_cleave(cl, g, {0, 0, 1}, 0);
  os << "b = (0,0,1), c = 0: w_p = " << degen.w_p.to_string(r)
     << ", w_q = " << degen.w_q.to_string(r) << "\n";
  auto bad = verify_cleave(cl, g, {1, 1, 0}, 1);
  os << "status: " << to_string(pencil.status) << "; with b_2 = 0: "
     << to_string(bad.status) << "\n";
  os << "mirror of A:  " << ambient_text(pencil.mirror_a) << "\n";
  os << "mirror of A': " << ambient_text(pencil.mirror_a2) << "\n";
  out.json = cleave_to_json(pencil);
}

int do_example(const Options& o, Output& out) {
  if (o.example == "quintic")
    example_quintic(out);
  else if (o.example == "chain")
    example_chain(out);
  else if (o.example == "cubic")
    example_cubic(out);
  else
    throw Error(ErrorCode::InvalidArgument,
                "unknown example '" + o.example + "' (quintic, chain, cubic)");
  return kExitOk;
}

int dispatch(const Options& o, Output& out) {
  const std::string& v = o.verb;
  if (v == "classify")
    do_classify(o, out);
  else if (v == "weights")
    do_weights(o, out);
  else if (v == "transpose")
    do_transpose(o, out);
  else if (v == "groups")
    do_groups(o, out);
  else if (v == "dual-group")
    do_dual_group(o, out);
  else if (v == "gorenstein")
    do_gorenstein(o, out);
  else if (v == "mirror")
    do_mirror(o, out);
  else if (v == "cleave-path")
    do_cleave_path(o, out);
  else if (v == "verify")
    return do_verify(o, out);
  else if (v == "example")
    return do_example(o, out);
  return kExitOk;
}

} // namespace

std::string example_text(const std::string& name) {
  Options o;
  o.example = name;
  Output out;
  do_example(o, out);
  return out.text.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Berglund-Huebsch-Krawitz mirrors and their derived equivalences", "bhk"};
  app.require_subcommand(1, 1);
  Options o;
  auto input = [&](CLI::App* sub, bool two) {
    sub->add_option("--poly-a", o.poly_a, "polynomial file");
    sub->add_option("--matrix", o.matrix_a, "exponent matrix file");
    if (two) {
      sub->add_option("--poly-b", o.poly_b, "second polynomial file");
      sub->add_option("--matrix-b", o.matrix_b, "second exponent matrix file");
    }
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--json", o.json_path, "write the result as JSON");
    sub->add_flag("--verbose", o.verbose, "more detail");
  };
  auto group = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "J, SL or @FILE")->capture_default_str();
  };
  struct Verb {
    const char* name;
    const char* help;
    bool two, grp;
  };
  const Verb verbs[] = {
      {"classify", "atomic types and diagram", false, false},
      {"weights", "weight system", false, false},
      {"transpose", "Berglund-Huebsch transpose", false, false},
      {"groups", "diagonal symmetry groups", false, true},
      {"dual-group", "dual group of G", false, true},
      {"gorenstein", "is P(q)/G Gorenstein", false, true},
      {"mirror", "BHK mirror data", false, true},
      {"cleave-path", "cleaves through the Fermat polynomial", true, true},
      {"verify", "certify the equivalence of two mirrors", true, true},
  };
  for (const auto& v : verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    input(sub, v.two);
    common(sub);
    if (v.grp)
      group(sub);
    sub->callback([&o, name = v.name] { o.verb = name; });
    if (std::string(v.name) == "classify")
      sub->add_flag("--dot", o.dot, "print the diagram as DOT");
    if (std::string(v.name) == "verify") {
      sub->add_option("--b", o.b, "coefficients b_i, comma separated (default all 1)");
      sub->add_option("--c", o.c, "coefficient of u*prod(y)")->capture_default_str();
      sub->add_option("--max-spairs", o.max_spairs, "Groebner pair limit");
      sub->add_option("--max-terms", o.max_terms, "Groebner term limit");
      sub->add_flag("--timing", o.timing, "report wall time");
      sub->add_option("--replay", o.replay_path, "replay the certificates of a JSON report");
    }
  }
  auto* ex = app.add_subcommand("example", "built-in examples");
  ex->add_option("name", o.example, "quintic, chain or cubic")->required();
  common(ex);
  ex->callback([&o] { o.verb = "example"; });

  std::vector<const char*> argv{"bhk"};
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  Output result;
  try {
    result.code = dispatch(o, result);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  out << result.text.str();
  if (!o.json_path.empty()) {
    std::ofstream f(o.json_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.json_path << "\n";
      return kExitError;
    }
    f << result.json.dump(2) << "\n";
  }
  return result.code;
}

} // namespace bhk
