// Command-line front end. Exit codes: 0 certified/success, 1 checked and
// failed, 2 usage or IO error.

#include "morsecert/examples.hpp"
#include "morsecert/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace morsecert;

namespace {

struct Options {
  std::string example;
  std::string input;
  std::string format = "json";
};

struct Outcome {
  Json json;
  std::string text;
  int code = 0;
};

Situation load_situation(const Options& o) {
  if (!o.example.empty() && !o.input.empty()) throw CLI::ValidationError("use either --example or --input");
  if (!o.input.empty()) return read_situation_file(o.input);
  if (o.example.empty()) throw CLI::ValidationError("one of --example or --input is required");
  return build_example(parse_example_spec(o.example));
}

CurvatureCertificate situation_curvature(const Situation& s) {
  std::vector<CurvatureCertificate> certs;
  for (const auto& f : s.factors) certs.push_back(certify_2complex(f.complex, f.angles, f.geometry));
  return certify_product(s.product(), certs);
}

Outcome cmd_build(const Situation& s) {
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto& f = s.factors[i];
    const std::string where = "factor " + std::to_string(i + 1) + ": ";
    for (const auto& d : validate_complex(f.complex)) problems.push_back(where + d);
    if (!problems.empty()) continue;
    for (const auto& d : validate_morse(f.complex, f.weights)) problems.push_back(where + d);
    for (const auto& d : validate_automorphism(f.complex, f.sigma)) problems.push_back(where + d);
  }
  Json j = to_json(s);
  std::ostringstream t;
  t << s.name << ": " << s.factors.size() << " factor(s)\n";
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto& c = s.factors[i].complex;
    t << "  factor " << i + 1 << ": " << c.vertices().size() << " vertices, " << c.edges().size() << " edges, "
      << c.faces().size() << " faces\n";
  }
  for (const auto& p : problems) t << "  problem: " << p << "\n";
  return {j, t.str(), problems.empty() ? 0 : 1};
}

Outcome cmd_check_npc(const Situation& s) {
  const auto cert = situation_curvature(s);
  std::ostringstream t;
  t << to_string(cert.verdict) << " via " << to_string(cert.rule) << ", minimum link cycle angle "
    << (cert.min_cycle_angle ? to_string(*cert.min_cycle_angle) + " pi" : "inf") << "\n";
  if (cert.witness) {
    t << "short cycle at " << cert.witness->vertex << ":";
    for (const auto& l : cert.witness->labels) t << " " << l;
    t << "\n";
  }
  return {to_json(cert), t.str(), cert.verdict == CurvatureCertificate::Verdict::fail ? 1 : 0};
}

Outcome cmd_check_morse(const Situation& s) {
  Json factors = Json::array();
  std::ostringstream t;
  bool ok = true;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto d = validate_morse(s.factors[i].complex, s.factors[i].weights);
    ok = ok && d.empty();
    factors.push_back({{"factor", i + 1}, {"valid", d.empty()}, {"problems", d}});
    for (const auto& p : d) t << "factor " << i + 1 << ": " << p << "\n";
  }
  Json j = {{"factors", factors}};
  if (ok) {
    const long index = morse_image_index(s.product(), s.weightings());
    j["image_index"] = index;
    t << "valid circle-valued Morse function; image of f_* has index " << index << " in Z\n";
  } else {
    j["image_index"] = nullptr;
  }
  j["valid"] = ok;
  return {j, t.str(), ok ? 0 : 1};
}

LinkComplex choose_link(const Situation& s, bool ascending, bool descending) {
  const auto p = s.product();
  if (ascending) return ascending_link(p, s.weightings(), s.vertex());
  if (descending) return descending_link(p, s.weightings(), s.vertex());
  return polarized_link(p, s.weightings(), s.vertex());
}

Outcome cmd_link(const Situation& s, bool ascending, bool descending) {
  const auto link = choose_link(s, ascending, descending);
  Json j = to_json(link);
  j["homology"] = to_json(link_homology(link));
  std::ostringstream t;
  t << (ascending ? "ascending" : descending ? "descending" : "full") << " link: " << link.vertex_count()
    << " vertices, " << link.edge_count() << " edges, dimension " << link.dimension() << "\n";
  t << "reduced homology: " << link_homology(link).describe() << "\n";
  return {j, t.str(), 0};
}

Outcome cmd_homology(const Situation& s) {
  const auto p = s.product();
  Json j;
  std::ostringstream t;
  for (const auto& [name, link] : {std::pair{std::string("link"), polarized_link(p, s.weightings(), s.vertex())},
                                   std::pair{std::string("ascending"), ascending_link(p, s.weightings(), s.vertex())},
                                   std::pair{std::string("descending"),
                                             descending_link(p, s.weightings(), s.vertex())}}) {
    const auto h = link_homology(link);
    j[name] = to_json(h);
    t << name << ": " << h.describe() << "\n";
  }
  return {j, t.str(), 0};
}

Outcome cmd_finiteness(const Situation& s) {
  const auto p = s.product();
  const auto r = finiteness_report(ascending_link(p, s.weightings(), s.vertex()),
                                   descending_link(p, s.weightings(), s.vertex()));
  std::ostringstream t;
  t << r.conclusion << "\n" << r.rule << "\n";
  const bool decided = r.kind != FinitenessReport::Kind::inconclusive;
  return {to_json(r), t.str(), decided ? 0 : 1};
}

Outcome cmd_certify(const Situation& s) {
  const auto cert = certify_model_situation(s);
  std::ostringstream t;
  for (const auto& c : cert.checks) t << (c.passed ? "pass " : "FAIL ") << c.name << ": " << c.detail << "\n";
  if (cert.conclusion) {
    t << "conclusion: " << *cert.conclusion << "\n";
  } else {
    t << "conclusion withheld; failed:";
    for (const auto& n : cert.failed_checks()) t << " " << n;
    t << "\n";
  }
  return {to_json(s, cert), t.str(), cert.all_passed() && cert.conclusion ? 0 : 1};
}

Outcome cmd_witnesses(const Situation& s, std::size_t count) {
  const auto cert = certify_model_situation(s);
  if (!cert.conclusion) {
    Json j = to_json(s, cert);
    return {j, "hypotheses fail; no witnesses\n", 1};
  }
  Json heights = Json::array();
  std::ostringstream t;
  t << cert.witness_family->formula << "; " << cert.witness_family->height_rule << "\n";
  for (std::size_t n = 0; n < count; ++n) heights.push_back(static_cast<long>(n));
  Json j = {{"formula", cert.witness_family->formula},
            {"height_rule", cert.witness_family->height_rule},
            {"order", cert.order},
            {"heights", heights}};
  const bool free_model = std::all_of(s.factors.begin(), s.factors.end(), [](const SituationFactor& f) {
    return f.complex.faces().empty() && f.complex.edges().size() == 2;
  });
  if (free_model && s.name.rfind("raag-", 0) == 0) {
    const std::size_t rank = s.factors.size();
    DoubledFreeElement tt = DoubledFreeElement::identity(rank);
    tt.coords[0] = FreeWord::generator(1);
    Json elements = Json::array();
    for (std::size_t n = 0; n < count; ++n) {
      const auto w = witness(static_cast<long>(n), tt);
      elements.push_back({{"n", n}, {"element", to_json(w)}, {"iota", iota(w)}});
      t << "n=" << n << ": " << to_string(w) << ", iota " << iota(w) << "\n";
    }
    j["elements"] = elements;
  } else {
    for (std::size_t n = 0; n < count; ++n) t << "n=" << n << ": fixed vertex at height " << n << "\n";
  }
  return {j, t.str(), 0};
}

Outcome cmd_oracle(const std::string& pair_file, std::size_t rank, std::vector<long> witnesses, std::size_t max_len,
                   bool kernel) {
  DoubledFreeElement g, h;
  if (!pair_file.empty()) {
    const Json j = read_json_file(pair_file);
    g = element_from_json(j.at("g"));
    h = element_from_json(j.at("h"));
    kernel = j.value("restrict_to_kernel", kernel);
  } else {
    if (witnesses.size() != 2) throw CLI::ValidationError("give --pair FILE or --witnesses I J");
    DoubledFreeElement t = DoubledFreeElement::identity(rank);
    t.coords[0] = FreeWord::generator(1);
    g = witness(witnesses[0], t);
    h = witness(witnesses[1], t);
  }
  const auto v = conjugacy_oracle(g, h, max_len, kernel);
  Json j = to_json(v);
  j["g"] = to_json(g);
  j["h"] = to_json(h);
  j["restrict_to_kernel"] = kernel;
  std::ostringstream t;
  t << to_string(g) << " vs " << to_string(h) << ": ";
  if (v.conjugate) {
    t << "conjugate by " << to_string(*v.conjugator) << "\n";
  } else {
    t << "no conjugator of length <= " << max_len << " (" << v.candidates_examined << " candidates)\n";
  }
  return {j, t.str(), v.conjugate ? 0 : 1};
}

FreeGroupEndo named_endo(const std::string& name, std::size_t k) {
  if (name == "sigma") return sigma(k);
  if (name.size() > 3 && (name.rfind("phi", 0) == 0 || name.rfind("psi", 0) == 0)) {
    const std::size_t i = std::stoul(name.substr(3));
    return name[1] == 'h' ? phi(i, k) : psi(i, k);
  }
  throw InvalidInput("unknown generator '" + name + "' (expected phiI, psiI or sigma)");
}

Outcome cmd_aut_verify(std::size_t k) {
  const auto r = verify_relations(k);
  std::ostringstream t;
  for (const auto& c : r.checks) t << (c.holds ? "holds " : "FAILS ") << c.relation << (c.holds ? "" : ": " + c.detail) << "\n";
  return {to_json(r), t.str(), r.all_hold() ? 0 : 1};
}

FreeGroupEndo endo_input(const std::string& file, const std::string& generator, std::size_t k) {
  if (!file.empty()) return endo_from_json(read_json_file(file));
  if (!generator.empty()) return named_endo(generator, k);
  throw CLI::ValidationError("give --endo FILE or --generator NAME");
}

Outcome cmd_aut_abelianize(const FreeGroupEndo& e) {
  const auto m = abelianization(e);
  std::ostringstream t;
  for (const auto& row : m) {
    for (std::size_t i = 0; i < row.size(); ++i) t << (i ? " " : "") << to_string(row[i]);
    t << "\n";
  }
  return {{{"endomorphism", to_json(e)}, {"matrix", to_json(m)}}, t.str(), 0};
}

Outcome cmd_aut_pingpong(long max_n) {
  const auto cert = pingpong_search(abelianization(phi(1, 2)), abelianization(psi(1, 2)), max_n);
  if (!cert) return {{{"certificate", nullptr}}, "no ping-pong certificate with N <= " + std::to_string(max_n) + "\n", 1};
  const auto chain = freeness_chain(cert);
  std::ostringstream t;
  t << "N = " << cert->n << "\n";
  for (const auto& line : chain) t << line << "\n";
  return {{{"certificate", to_json(*cert)}, {"freeness_chain", chain}}, t.str(), 0};
}

Outcome cmd_aut_inner(const FreeGroupEndo& e, const std::string& inverse_file) {
  std::optional<FreeGroupEndo> inverse;
  if (!inverse_file.empty()) inverse = endo_from_json(read_json_file(inverse_file));
  const auto r = is_inner(e, inverse);
  const auto alphabet = Alphabet::indexed("x");
  Json j = {{"inner", r.inner}, {"conjugator", r.inner ? Json(r.conjugator.to_letter_string(alphabet)) : Json(nullptr)}};
  std::string text = r.inner ? "inner, conjugator " + r.conjugator.to_letter_string(alphabet) + "\n" : "not inner\n";
  return {j, text, r.inner ? 0 : 1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for Morse-theoretic and curvature arguments on polygonal complexes"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto with_source = [&](CLI::App* sub) {
    sub->add_option("--example", opt.example, "raag-N, hexagon or hexagon-product");
    sub->add_option("--input", opt.input, "Situation bundle (JSON)");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    return sub;
  };

  auto* build = with_source(app.add_subcommand("build", "Build an example and run its validators"));
  auto* check = app.add_subcommand("check", "Curvature or Morse checks");
  check->require_subcommand(1);
  auto* npc = with_source(check->add_subcommand("npc", "Link condition"));
  auto* morse = with_source(check->add_subcommand("morse", "Morse function validity"));
  bool asc = false, desc = false;
  auto* link = with_source(app.add_subcommand("link", "Link at the base vertex"));
  auto* asc_flag = link->add_flag("--ascending", asc);
  link->add_flag("--descending", desc)->excludes(asc_flag);
  auto* homol = with_source(app.add_subcommand("homology", "Reduced homology of the links"));
  auto* fin = with_source(app.add_subcommand("finiteness", "Finiteness type of the kernel"));
  auto* cert = with_source(app.add_subcommand("certify", "Model situation certificate"));
  std::size_t count = 6;
  auto* wit = with_source(app.add_subcommand("witnesses", "Finite-order witness family"));
  wit->add_option("--count", count, "Number of witnesses")->check(CLI::Range(1, 1000));

  auto* oracle = app.add_subcommand("oracle", "Algebraic oracles");
  oracle->require_subcommand(1);
  auto* conj = oracle->add_subcommand("conjugacy", "Bounded conjugacy search in (F_2)^n x| Z/2");
  std::size_t max_len = 6, rank = 1;
  std::string pair_file;
  std::vector<long> wpair;
  bool kernel = true;
  conj->add_option("--max-len", max_len, "Conjugator length bound")->check(CLI::Range(0, 8));
  conj->add_option("--pair", pair_file, "JSON {g, h, restrict_to_kernel}");
  conj->add_option("--witnesses", wpair, "Compare witness(I) and witness(J)")->expected(2);
  conj->add_option("--rank", rank, "Rank for --witnesses")->check(CLI::Range(1, 2));
  conj->add_option("--kernel", kernel, "Restrict conjugators to the kernel");
  conj->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

  auto* aut = app.add_subcommand("aut", "Automorphisms of free groups");
  aut->require_subcommand(1);
  std::size_t k = 2;
  long max_n = 16;
  std::string endo_file, generator, inverse_file;
  auto* verify = aut->add_subcommand("verify", "Check the defining relations");
  verify->add_option("--rank", k)->check(CLI::Range(2, 64));
  auto* abel = aut->add_subcommand("abelianize", "Abelianization matrix");
  auto* pp = aut->add_subcommand("pingpong", "Ping-pong freeness certificate");
  pp->add_option("--max-N", max_n)->check(CLI::Range(1, 64));
  auto* inner = aut->add_subcommand("inner", "Inner automorphism test");
  for (auto* sub : {abel, inner}) {
    sub->add_option("--endo", endo_file, "Endomorphism JSON");
    sub->add_option("--generator", generator, "phiI, psiI or sigma");
    sub->add_option("--rank", k)->check(CLI::Range(1, 64));
  }
  inner->add_option("--inverse", inverse_file, "Inverse endomorphism JSON");
  for (auto* sub : {verify, abel, pp, inner}) sub->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome out;
    if (build->parsed()) out = cmd_build(load_situation(opt));
    else if (npc->parsed()) out = cmd_check_npc(load_situation(opt));
    else if (morse->parsed()) out = cmd_check_morse(load_situation(opt));
    else if (link->parsed()) out = cmd_link(load_situation(opt), asc, desc);
    else if (homol->parsed()) out = cmd_homology(load_situation(opt));
    else if (fin->parsed()) out = cmd_finiteness(load_situation(opt));
    else if (cert->parsed()) out = cmd_certify(load_situation(opt));
    else if (wit->parsed()) out = cmd_witnesses(load_situation(opt), count);
    else if (conj->parsed()) out = cmd_oracle(pair_file, rank, wpair, max_len, kernel);
    else if (verify->parsed()) out = cmd_aut_verify(k);
    else if (abel->parsed()) out = cmd_aut_abelianize(endo_input(endo_file, generator, k));
    else if (pp->parsed()) out = cmd_aut_pingpong(max_n);
    else if (inner->parsed()) out = cmd_aut_inner(endo_input(endo_file, generator, k), inverse_file);
    std::cout << (opt.format == "text" ? out.text : dump(out.json));
    return out.code;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
