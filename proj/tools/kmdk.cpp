#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "kmdk/kmdk.hpp"

using namespace kmdk;

namespace {

struct Opts {
  std::string gcm_file;
  std::string positional;
  std::optional<int> L;
  std::optional<Int> box;
  std::optional<std::string> k, j;
  std::optional<std::string> weight;
  std::string format = "human";
  std::optional<Int> max_steps;
  std::string method = "sector";
  std::string direction = "limit";
  bool maximal = false;
};

Opts o;
std::ostringstream out;

bool tsv() { return o.format == "tsv"; }
// key/value separator
const char *sep() { return tsv() ? "\t" : " "; }

Gcm load() {
  const std::string path = !o.gcm_file.empty() ? o.gcm_file : o.positional;
  if (path.empty())
    fail(Errc::UsageError, "no GCM file given (use --gcm FILE)");
  return load_gcm(path);
}

void header(const Gcm &a) {
  std::ostringstream h;
  h << "# kmdk " << version << " gcm=" << std::hex << std::setw(16) << std::setfill('0')
    << a.hash() << std::dec << " L=" << (o.L ? std::to_string(*o.L) : "-")
    << " box=" << (o.box ? std::to_string(*o.box) : "-");
  out << h.str() << "\n";
}

int need_L() {
  if (!o.L)
    fail(Errc::UsageError, "--max-length is required");
  if (*o.L < 0)
    fail(Errc::UsageError, "--max-length must be nonnegative");
  return *o.L;
}

Box need_box() {
  if (!o.box)
    fail(Errc::UsageError, "--box is required");
  if (*o.box < 0)
    fail(Errc::UsageError, "--box must be nonnegative");
  return Box{*o.box, *o.box};
}

NodeSet need_set(const std::optional<std::string> &s, const Gcm &a, const char *flag) {
  if (!s)
    fail(Errc::UsageError, std::string(flag) + " is required");
  return parse_set(*s, a);
}

Weight need_weight(const Realization &R) {
  if (!o.weight)
    fail(Errc::UsageError, "--weight is required");
  return parse_weight(*o.weight, R);
}

std::string yn(bool b) { return b ? "true" : "false"; }

void print_elements(const Gcm &a, const std::vector<CoxeterElement> &ws) {
  if (!tsv())
    out << "count" << sep() << ws.size() << "\n";
  for (const auto &w : ws)
    out << w.length() << "\t" << word_text(w, a) << "\n";
}

void print_character(const Realization &R, const FormalCharacter &f) {
  if (tsv())
    out << character_tsv(f, R.n);
  else
    out << "terms" << sep() << f.size() << "\n" << character_text(f) << "\n";
}

// ---- commands

void cmd_classify() {
  Gcm a = load();
  header(a);
  auto t = classify_type(a);
  out << "kind" << sep() << kind_name(t.kind) << "\n";
  out << "indecomposable" << sep() << yn(t.indecomposable) << "\n";
  out << "symmetrizable" << sep() << yn(t.symmetrizable);
  if (t.symmetrizable) {
    out << " d=";
    for (std::size_t i = 0; i < t.symmetrizer.size(); ++i)
      out << (i ? "," : "") << t.symmetrizer[i];
  }
  out << "\n";
  out << "compact_type" << sep() << yn(t.compact_type) << "\n";
  if (t.extended_compact)
    out << "extended_compact I0=" << set_label_text(t.extended_compact->core, a)
        << " J0=" << set_label_text(t.extended_compact->extra, a) << "\n";
  else
    out << "extended_compact none\n";
  for (std::size_t b = 0; b < t.blocks.size(); ++b)
    out << "block" << sep() << set_label_text(t.blocks[b], a) << " " << kind_name(t.block_kinds[b])
        << "\n";
  for (NodeSet m : t.minimal_nonfinite)
    out << "minimal_nonfinite" << sep() << set_label_text(m, a) << "\n";
}

void cmd_spherical() {
  Gcm a = load();
  header(a);
  auto P = spherical_poset(a);
  if (!tsv())
    out << "members" << sep() << P.members.size() << "\n";
  for (NodeSet J : P.members)
    out << J.size() << "\t" << set_label_text(J, a) << "\n";
}

void cmd_ball() {
  Gcm a = load();
  header(a);
  CoxeterGroup G(a);
  print_elements(a, G.ball(need_L()));
}

void cmd_cosets() {
  Gcm a = load();
  header(a);
  CoxeterGroup G(a);
  const NodeSet J = need_set(o.j, a, "--j");
  std::optional<NodeSet> K;
  if (o.k)
    K = parse_set(*o.k, a);
  print_elements(a, G.min_coset_reps(J, K, need_L()));
}

void cmd_pure() {
  Gcm a = load();
  header(a);
  CoxeterGroup G(a);
  print_elements(a, G.pure_reps(need_set(o.k, a, "--k"), need_set(o.j, a, "--j"), need_L(),
                                o.maximal));
}

void cmd_reduce() {
  Gcm a = load();
  header(a);
  CoxeterGroup G(a);
  const auto &R = G.realization();
  auto r = chamber_reduce(G, need_weight(R), o.max_steps);
  out << "status" << sep() << cone_status_name(r.status) << "\n";
  if (r.status == ConeStatus::InCone) {
    out << "mu" << sep() << weight_text(r.mu, R.n) << "\n";
    out << "w" << sep() << word_text(r.w, a) << "\n";
  }
  if (r.level)
    out << "level" << sep() << *r.level << "\n";
  out << "steps" << sep() << r.steps << "\n";
}

void cmd_stratum() {
  Gcm a = load();
  header(a);
  CoxeterGroup G(a);
  out << "stratum" << sep() << set_label_text(stratum(G.realization(), need_weight(G.realization())), a)
      << "\n";
}

void cmd_level() {
  Gcm a = load();
  header(a);
  CoxeterGroup G(a);
  out << "level" << sep() << affine_level(G, need_weight(G.realization())) << "\n";
}

void cmd_character(const std::string &which) {
  Gcm a = load();
  header(a);
  CoxeterGroup G(a);
  const auto &R = G.realization();
  if (which == "numerator" && !o.j) {
    print_character(R, weyl_numerator_ball(G, need_L(), need_weight(R)));
    return;
  }
  const NodeSet J = need_set(o.j, a, "--j");
  if (which == "levi")
    print_character(R, levi_irreducible_character(G, J, need_weight(R)));
  else if (which == "dirac")
    print_character(R, dirac_induction(G, J, need_weight(R)));
  else if (which == "numerator")
    print_character(R, weyl_numerator(G, J, need_weight(R)));
  else if (which == "spinor")
    print_character(R, spinor_character(G, J));
  else {
    const Weight mu = need_weight(R);
    out << "ambient_dominant" << sep() << yn(ambient_dominance_test(G, J, mu)) << "\n";
    auto orc = ambient_dominance_oracle(G, J, mu, o.max_steps);
    out << "weights_in_cone" << sep() << cone_status_name(orc.status) << "\n";
    out << "weights_checked" << sep() << orc.weights_checked << "\n";
    if (orc.witness)
      out << "witness" << sep() << weight_text(*orc.witness, R.n) << "\n";
  }
}

void cmd_nerve() {
  Gcm a = load();
  header(a);
  auto X = nerve_complex(spherical_poset(a), a);
  auto f = X.f_vector();
  out << "f_vector";
  for (Int x : f)
    out << " " << x;
  out << "\n";
  out << cohomology_text(snf_cohomology(X.cells()), "H").c_str();
}

void print_cohomology(const IntegerCohomology &h) {
  if (tsv()) {
    for (std::size_t p = 0; p < h.degrees.size(); ++p) {
      out << p << "\t" << h.degrees[p].rank << "\t";
      for (std::size_t i = 0; i < h.degrees[p].torsion.size(); ++i)
        out << (i ? "," : "") << h.degrees[p].torsion[i];
      out << "\n";
    }
    return;
  }
  out << cohomology_text(h);
}

void cmd_hc() {
  Gcm a = load();
  header(a);
  CoxeterGroup G(a);
  const NodeSet K = need_set(o.k, a, "--k");
  const int L = need_L();
  if (o.method == "snf") {
    print_cohomology(truncated_cohomology(G, K, L));
    return;
  }
  auto rep = sector_filtration_cohomology(G, K, L);
  print_cohomology(rep.cohomology());
  if (!tsv()) {
    for (const auto &g : rep.generators)
      out << "generator" << sep() << set_label_text(K, a) << " " << word_text(g, a) << "\n";
  } else {
    out << "# step\tword\tverdict\n";
    for (std::size_t s = 0; s < rep.steps.size(); ++s)
      out << s << "\t" << word_text(rep.steps[s].tag, a) << "\t"
          << verdict_name(rep.steps[s].verdict) << "\n";
  }
}

void cmd_hc_hat() {
  Gcm a = load();
  header(a);
  CoxeterGroup G(a);
  const NodeSet K = need_set(o.k, a, "--k");
  auto rep = hat_sector_cohomology(G, K, need_L());
  print_cohomology(rep.cohomology());
  if (!tsv()) {
    for (const auto &w : rep.bottom)
      out << "degree 0 " << word_text(w, a) << "\n";
    for (const auto &w : rep.top)
      out << "degree" << sep() << rep.n << " " << word_text(w, a) << "\n";
  }
}

void print_report(const Gcm &a, const Realization &R, const KTheoryReport &rep) {
  out << "# mode " << report_mode_name(rep.mode) << " n=" << rep.n << " r=" << rep.r
      << " L=" << (rep.L ? std::to_string(*rep.L) : "-") << " box=" << rep.box.coroot << "\n";
  if (tsv()) {
    for (const auto &s : rep.summands)
      out << s.degree << "\t" << set_label_text(s.K, a) << "\t" << s.coset_count() << "\t"
          << s.stratum.size() << "\n";
    return;
  }
  for (const auto &s : rep.summands) {
    out << "summand degree=" << s.degree << " K=" << set_label_text(s.K, a)
        << " cosets=" << (s.point ? std::string("{•}") : std::to_string(s.cosets.size()))
        << " stratum=" << s.stratum.size() << " rank=" << s.rank()
        << (s.unreduced ? " unreduced" : "") << "\n";
    const std::vector<CoxeterElement> pt{CoxeterElement{}};
    for (const auto &w : s.point ? pt : s.cosets)
      for (const auto &lam : s.stratum.weights)
        out << "  " << s.degree << "\t" << set_label_text(s.K, a) << "\t"
            << (s.point ? std::string("•") : word_text(w, a)) << "\t" << weight_text(lam, R.n)
            << "\n";
  }
}

void cmd_ktheory(const std::string &which) {
  Gcm a = load();
  header(a);
  CoxeterGroup G(a);
  const auto &R = G.realization();
  if (which == "compact")
    print_report(a, R, compact_type_report(G, need_box()));
  else if (which == "extended")
    print_report(a, R, extended_type_report(G, need_L(), need_box()));
  else if (which == "homology")
    print_report(a, R, k_homology_report(G, need_box()));
  else if (which == "predicates") {
    auto p = st_r_image_predicates(G, need_weight(R), o.max_steps);
    out << "regular_dominant_for_levi" << sep() << yn(p.regular_dominant_for_levi) << "\n";
    out << "in_image_St" << sep() << yn(p.in_image_St) << "\n";
    out << "in_image_of_r" << sep() << yn(p.in_image_of_r) << "\n";
    out << "cone" << sep() << cone_status_name(p.cone) << "\n";
  } else {
    const NodeSet K = need_set(o.k, a, "--k");
    const Box box = need_box();
    const int L = need_L();
    const bool colim = o.direction == "colimit";
    auto F = colim ? truncated_induced_functor(G, K, box, L)
                   : truncated_strata_functor(G, K, box, L);
    auto h = derived_limit_oracle(F, colim ? Direction::Colimit : Direction::Limit);
    const char *sym = colim ? "colim_" : "lim^";
    for (std::size_t p = 0; p < h.degrees.size() && static_cast<int>(p) < G.rank(); ++p) {
      if (tsv())
        out << p << "\t" << h.degrees[p].rank << "\n";
      else
        out << sym << p << " = " << group_text(h.degrees[p]) << "\n";
    }
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Kac-Moody dominant K-theory toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version));

  auto fmt = [](CLI::App *c) {
    c->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"human", "tsv"}));
  };
  auto gcm = [&](CLI::App *c) {
    c->add_option("--gcm", o.gcm_file, "GCM file");
    fmt(c);
  };
  auto len = [](CLI::App *c) { c->add_option("--max-length", o.L, "word-length bound L"); };
  auto box = [](CLI::App *c) { c->add_option("--box", o.box, "weight box bound B"); };
  auto kset = [](CLI::App *c) { c->add_option("--k", o.k, "node set K (\"\" = empty)"); };
  auto jset = [](CLI::App *c) { c->add_option("--j", o.j, "node set J (\"\" = empty)"); };
  auto wt = [](CLI::App *c) { c->add_option("--weight", o.weight, "weight, e.g. 2,0/1"); };
  auto steps = [](CLI::App *c) { c->add_option("--max-steps", o.max_steps, "reduction budget"); };

  std::function<void()> run;
  auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help,
                  std::function<void()> fn) {
    CLI::App *c = parent->add_subcommand(name, help);
    c->callback([&run, fn] { run = fn; });
    gcm(c);
    return c;
  };

  auto *c = leaf(&app, "classify", "type of a GCM; tsv: key<TAB>value", cmd_classify);
  c->add_option("file", o.positional, "GCM file");
  c = leaf(&app, "spherical", "spherical subsets; tsv: size<TAB>set", cmd_spherical);
  c->add_option("file", o.positional, "GCM file");

  auto *cox = app.add_subcommand("coxeter", "Weyl group enumeration")->require_subcommand(1);
  len(leaf(cox, "ball", "elements of length <= L; tsv: length<TAB>word", cmd_ball));
  c = leaf(cox, "cosets", "minimal coset reps (K\\W/W_J or W/W_J); tsv: length<TAB>word",
           cmd_cosets);
  len(c), kset(c), jset(c);
  c = leaf(cox, "pure", "pure double-coset reps; tsv: length<TAB>word", cmd_pure);
  len(c), kset(c), jset(c);
  c->add_flag("--maximal", o.maximal, "maximally pure only");

  auto *wts = app.add_subcommand("weights", "weights and the Tits cone")->require_subcommand(1);
  c = leaf(wts, "reduce", "chamber reduction; tsv: key<TAB>value", cmd_reduce);
  wt(c), steps(c);
  wt(leaf(wts, "stratum", "vanishing set of a dominant weight", cmd_stratum));
  wt(leaf(wts, "level", "affine level", cmd_level));

  auto *chr = app.add_subcommand("character", "Levi characters")->require_subcommand(1);
  for (std::string which : {"levi", "dirac", "numerator", "spinor", "ambient"}) {
    c = leaf(chr, which, which + " character; tsv: coefficient<TAB>weight",
             [which] { cmd_character(which); });
    jset(c);
    if (which != "spinor")
      wt(c);
    if (which == "numerator")
      len(c);
    if (which == "ambient")
      steps(c);
  }

  auto *dav = app.add_subcommand("davis", "Davis complex cohomology")->require_subcommand(1);
  leaf(dav, "nerve", "nerve of the spherical poset", cmd_nerve);
  c = leaf(dav, "hc", "H^*_c(Sigma/W_K); tsv: degree<TAB>rank<TAB>torsion", cmd_hc);
  len(c), kset(c);
  c->add_option("--method", o.method, "sector scan or SNF on a truncation")
      ->check(CLI::IsMember({"sector", "snf"}));
  c = leaf(dav, "hc-hat", "hat-sector cohomology; tsv: degree<TAB>rank<TAB>torsion", cmd_hc_hat);
  len(c), kset(c);

  auto *kt = app.add_subcommand("ktheory", "dominant K-theory reports")->require_subcommand(1);
  const char *rep_help = "summands; tsv: degree<TAB>K<TAB>coset-index-size<TAB>stratum-size";
  box(leaf(kt, "compact", rep_help, [] { cmd_ktheory("compact"); }));
  c = leaf(kt, "extended", rep_help, [] { cmd_ktheory("extended"); });
  len(c), box(c);
  box(leaf(kt, "homology", rep_help, [] { cmd_ktheory("homology"); }));
  c = leaf(kt, "predicates", "St / r image predicates", [] { cmd_ktheory("predicates"); });
  wt(c), steps(c);
  c = leaf(kt, "oracle", "derived (co)limits of truncated strata; tsv: degree<TAB>rank",
           [] { cmd_ktheory("oracle"); });
  len(c), box(c), kset(c);
  c->add_option("--direction", o.direction, "limit or colimit")
      ->check(CLI::IsMember({"limit", "colimit"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error UsageError: " << e.what() << "\n";
    return 2;
  }
  try {
    run();
  } catch (const Error &e) {
    std::cerr << "error " << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::UsageError ? 2 : 1;
  } catch (const std::exception &e) {
    std::cerr << "error Internal: " << e.what() << "\n";
    return 1;
  }
  std::cout << out.str();
  std::cout.flush();
  return 0;
}
