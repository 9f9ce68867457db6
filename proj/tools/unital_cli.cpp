// Command-line front end: builds unitals, runs the analyses, prints JSON.
//
// Exit codes: 0 success, 1 the analysis refuted what the command checks
// (invalid unital, failed lemma, no isomorphism), 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "unital/figueroa.hpp"
#include "unital/io.hpp"
#include "unital/plane.hpp"
#include "unital/report.hpp"
#include "unital/structure.hpp"
#include "unital/translations.hpp"

using namespace unital;
using report::json;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct Options {
  std::uint32_t q = 0;
  std::vector<std::string> in;
  std::string out;
  std::uint64_t p = 0;
  std::optional<Point> center;
  unsigned threads = 1;
  std::uint64_t budget = 0;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input that is readable but not a unital: the analysis refutes it.
class NotAUnital : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit_text(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

void emit(const Options& o, const std::string& command, const json& body) {
  const std::string input = o.in.empty() ? "" : o.in.front();
  emit_text(o, report::envelope(command, input, body).dump(2) + "\n");
}

const std::string& single_input(const Options& o) {
  if (o.in.size() != 1) throw UsageError("exactly one --in is required");
  return o.in.front();
}

Unital load(const std::string& path) {
  auto f = parse_unital_file(path);
  if (f.k < 3) throw NotAUnital("block size k must be at least 3");
  try {
    return Unital(std::move(f.incidence), f.k - 1);
  } catch (const std::invalid_argument& e) {
    throw NotAUnital(e.what());
  }
}

std::uint64_t choose_p(const Options& o, const TranslationAtlas& atlas) {
  if (o.p) return o.p;
  if (atlas.primes.empty()) throw NotAUnital("no nontrivial translations, so no prime to analyse");
  return *atlas.primes.begin();
}

void require_prime_power(std::uint32_t q) {
  try {
    prime_power(q);
  } catch (const std::invalid_argument&) {
    throw UsageError("--q must be a prime power");
  }
}

int cmd_build_hermitian(const Options& o) {
  require_prime_power(o.q);
  if (o.q > 8) throw UsageError("--q must be at most 8");
  const Unital u = hermitian_unital(o.q);
  std::ostringstream ss;
  write_unital(u.incidence(), ss);
  emit_text(o, ss.str());
  return kOk;
}

int cmd_build_figueroa(const Options& o) {
  const std::uint32_t q = o.q ? o.q : 2;
  require_prime_power(q);
  const FigPlane fig(q, o.threads);
  const FigPolarity pi = build_fig_polarity(fig, o.threads);
  const FigueroaUnital uf = build_polar_unital(fig, pi);
  std::ostringstream ss;
  write_unital(uf.unital.incidence(), ss);
  emit_text(o, ss.str());
  if (!o.out.empty() && o.out != "-") {
    std::ofstream side(o.out + ".json");
    if (!side) throw UsageError("cannot write " + o.out + ".json");
    side << report::figueroa_sidecar(fig, uf).dump(2) << "\n";
  }
  return kOk;
}

int cmd_validate(const Options& o) {
  const auto f = parse_unital_file(single_input(o));
  const std::size_t q = o.q ? o.q : (f.k >= 1 ? f.k - 1 : 0);
  const auto v = validate_unital(f.incidence, q);
  emit(o, "validate", report::validation(v));
  return v.valid ? kOk : kRefuted;
}

int cmd_translations(const Options& o) {
  const Unital u = load(single_input(o));
  if (o.center) {
    if (*o.center >= u.num_points()) throw UsageError("--center out of range");
    TranslationAtlas one;
    one.v = u.num_points();
    one.translations.resize(u.num_points());
    one.translations[*o.center] = translations_at(u, *o.center);
    emit(o, "translations", report::center(one, *o.center));
    return kOk;
  }
  emit(o, "translations", report::atlas(build_atlas(u, o.threads)));
  return kOk;
}

int cmd_omega(const Options& o) {
  const Unital u = load(single_input(o));
  const auto atlas = build_atlas(u, o.threads);
  json j = report::atlas_summary(atlas);
  json cong = json::object();
  bool ok = true;
  for (const auto& [n, pts] : atlas.omega) {
    const auto c = orbit_congruence_check(atlas, n);
    ok = ok && c.ok();
    cong[std::to_string(n)] = report::congruence(c);
  }
  j["congruence"] = cong;
  emit(o, "omega", j);
  return ok ? kOk : kRefuted;
}

int cmd_classify(const Options& o) {
  const Unital u = load(single_input(o));
  emit(o, "classify", report::classification(classify(u, o.threads)));
  return kOk;
}

int cmd_subunital(const Options& o) {
  const Unital u = load(single_input(o));
  const auto atlas = build_atlas(u, o.threads);
  const auto p = choose_p(o, atlas);
  if (atlas.omega_of(p).empty()) throw NotAUnital("Ω_p is empty for p = " + std::to_string(p));
  json j = report::subunital(subunital_analysis(u, atlas, p));
  j["constant_intersection"] = report::constant_intersection(constant_intersection_check(u, atlas, p));
  emit(o, "subunital", j);
  return kOk;
}

int cmd_onan(const Options& o) {
  const Unital u = load(single_input(o));
  emit(o, "onan", report::onan(onan_search(u.incidence(), o.budget, o.threads)));
  return kOk;
}

int cmd_isomorphic(const Options& o) {
  if (o.in.size() != 2) throw UsageError("isomorphic needs --in twice");
  const auto a = parse_unital_file(o.in[0]);
  const auto b = parse_unital_file(o.in[1]);
  const auto r = isomorphism_search(a.incidence, b.incidence, o.budget);
  json j = report::isomorphism(r);
  j["second_input"] = o.in[1];
  emit(o, "isomorphic", j);
  if (r.map) return kOk;
  return r.status == SearchStatus::exhausted ? kRefuted : kOk;
}

int cmd_check_lemmas(const Options& o) {
  const Unital u = load(single_input(o));
  const auto atlas = build_atlas(u, o.threads);
  json j = json::object();
  bool ok = true;
  const auto [pchar, e] = [&] {
    try {
      return prime_power(u.order());
    } catch (const std::invalid_argument&) {
      return std::pair<std::uint32_t, std::uint32_t>{0, 0};
    }
  }();
  if (pchar) {
    const auto ax = check_translation_axioms(u, atlas, pchar);
    ok = ok && ax.ok();
    j["translation_axioms"] = report::axioms(ax);
  }
  json lemmas = json::object(), cong = json::object();
  for (auto p : atlas.primes) {
    if (o.p && p != o.p) continue;
    if (atlas.omega_of(p).empty()) continue;
    const auto l = check_lemma_trs_omega_p(u, atlas, p);
    ok = ok && l.ok();
    lemmas[std::to_string(p)] = report::lemma(l);
  }
  for (const auto& [n, pts] : atlas.omega) {
    const auto c = orbit_congruence_check(atlas, n);
    ok = ok && c.ok();
    cong[std::to_string(n)] = report::congruence(c);
  }
  j["lemma"] = lemmas;
  j["congruence"] = cong;
  j["ok"] = ok;
  emit(o, "check-lemmas", j);
  return ok ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitals, their translations and the groups they generate"};
  app.require_subcommand(1);
  Options o;
  std::string center_arg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output path (default stdout)");
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  };
  auto add_in = [&](CLI::App* sub) { sub->add_option("--in", o.in, "Input unital file")->required(); };

  auto* build_h = app.add_subcommand("build-hermitian", "Write the hermitian unital of order q");
  build_h->add_option("--q", o.q, "Order (prime power <= 8)")->required();
  add_common(build_h);

  auto* build_f = app.add_subcommand("build-figueroa", "Write the Figueroa polar unital (plus <out>.json)");
  build_f->add_option("--q", o.q, "q, plane order q^6 (default 2)");
  add_common(build_f);

  auto* validate = app.add_subcommand("validate", "Check the unital axioms");
  add_in(validate);
  validate->add_option("--q", o.q, "Order (default: k-1 from the header)");
  add_common(validate);

  auto* trans = app.add_subcommand("translations", "Enumerate translations");
  add_in(trans);
  trans->add_option("--center", center_arg, "Only this center");
  add_common(trans);

  auto* omega = app.add_subcommand("omega", "Omega sets, mho, K and congruences");
  add_in(omega);
  add_common(omega);

  auto* cls = app.add_subcommand("classify", "Classification harness");
  add_in(cls);
  add_common(cls);

  auto* sub = app.add_subcommand("subunital", "Analyse the trace structure on Omega_p");
  add_in(sub);
  sub->add_option("--p", o.p, "Prime (default: least in K)");
  add_common(sub);

  auto* on = app.add_subcommand("onan", "Search for an O'Nan configuration");
  add_in(on);
  on->add_option("--budget", o.budget, "Node cap, 0 = exhaustive");
  add_common(on);

  auto* iso = app.add_subcommand("isomorphic", "Search for an isomorphism between two files");
  iso->add_option("--in", o.in, "Input file (give twice)")->required();
  iso->add_option("--budget", o.budget, "Node cap, 0 = exhaustive");
  add_common(iso);

  auto* lem = app.add_subcommand("check-lemmas", "Translation axioms, transitivity lemmas, congruences");
  add_in(lem);
  lem->add_option("--p", o.p, "Restrict to this prime");
  add_common(lem);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (!center_arg.empty()) {
      try {
        o.center = static_cast<Point>(std::stoul(center_arg));
      } catch (const std::exception&) {
        throw UsageError("--center must be a point index");
      }
    }
    if (build_h->parsed()) return cmd_build_hermitian(o);
    if (build_f->parsed()) return cmd_build_figueroa(o);
    if (validate->parsed()) return cmd_validate(o);
    if (trans->parsed()) return cmd_translations(o);
    if (omega->parsed()) return cmd_omega(o);
    if (cls->parsed()) return cmd_classify(o);
    if (sub->parsed()) return cmd_subunital(o);
    if (on->parsed()) return cmd_onan(o);
    if (iso->parsed()) return cmd_isomorphic(o);
    if (lem->parsed()) return cmd_check_lemmas(o);
  } catch (const NotAUnital& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRefuted;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
