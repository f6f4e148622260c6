#include "actbij/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "actbij/activities.hpp"
#include "actbij/bijection.hpp"
#include "actbij/graph_io.hpp"
#include "actbij/tutte.hpp"

namespace actbij {

namespace {

// Input problems; reported with exit code 2.
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OrientedMatroid load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matroid_file(buf.str());
  } catch (const ParseError& e) {
    throw BadInput(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw BadInput(path + ": " + e.what());
  } catch (const EnumerationLimit& e) {
    throw BadInput(path + ": " + e.what());
  }
}

ElementSet token(const std::string& text, int n, const char* what) {
  try {
    return parse_reorientation(text, n);
  } catch (const ParseError& e) {
    throw BadInput(std::string(what) + " '" + text + "': " + e.what());
  }
}

std::string members(const std::vector<ElementSet>& sets) {
  std::string s;
  for (ElementSet x : sets) s += (s.empty() ? "" : " ") + format_set(x);
  return s;
}

std::vector<ElementSet> subsets(ElementSet ground) {
  require_enumerable(ground.size(), "subset sweep");
  std::vector<ElementSet> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << ground.size()); ++s) out.push_back(ground.pick(s));
  return out;
}

bool four_var_agree(const OrientedMatroid& m, const TuttePolynomial& t, bool reorientations) {
  for (int v = 0; v < 81; ++v) {
    const int x = v % 3, u = v / 3 % 3, y = v / 9 % 3, w = v / 27;
    auto got = reorientations ? four_var_reorientation_sum(m, x, u, y, w) : four_var_subset_sum(m, x, u, y, w);
    if (got != t.evaluate(x + u, y + w)) return false;
  }
  return true;
}

int cmd_tutte(const OrientedMatroid& m, bool check, std::ostream& out) {
  auto t = tutte_from_bases(m);
  out << "i\tj\tb_ij\n";
  for (const auto& [ij, c] : t.terms()) out << ij.first << '\t' << ij.second << '\t' << c << '\n';
  out << "polynomial\t" << t.to_string() << '\n';
  if (!check) return kExitOk;
  // every route is compared with deletion/contraction
  const auto ref = tutte_delcon_oracle(m);
  bool by_orientations = false;
  try {
    by_orientations = tutte_from_orientations(m) == ref;
  } catch (const std::logic_error&) {  // inexact division
  }
  const std::pair<const char*, bool> routes[] = {
      {"bases", t == ref},
      {"orientations", by_orientations},
      {"subset-expansion", four_var_agree(m, ref, false)},
      {"reorientation-expansion", four_var_agree(m, ref, true)},
  };
  int agree = 0;
  for (const auto& [name, ok] : routes) {
    out << name << '\t' << (ok ? "ok" : "MISMATCH") << '\n';
    agree += ok;
  }
  out << "agree=" << agree << "/4\n";
  return agree == 4 ? kExitOk : kExitVerifyFailed;
}

int cmd_activities(const OrientedMatroid& ref, ElementSet a, std::ostream& out) {
  auto m = reorient(ref, a);
  auto act = orientation_activities(m);
  auto f = active_filtration_orientation(m);
  out << "field\tvalue\n";
  out << "active\t" << format_set(act.active) << '\n';
  out << "dual_active\t" << format_set(act.dual_active) << '\n';
  out << "partition\t" << format_partition(f) << '\n';
  out << "filtration\t" << format_chain(f) << '\n';
  return kExitOk;
}

int cmd_table(const OrientedMatroid& m, std::ostream& out) {
  out << "filtration\tpartition\tclass\tbasis\n";
  for (ElementSet b : bases(m)) {
    auto r = alpha_inverse_class(m, b);
    out << format_chain(r.filtration) << '\t' << format_partition(r.filtration) << '\t' << members(r.class_members)
        << '\t' << format_set(b) << '\n';
  }
  return kExitOk;
}

int cmd_refined(const OrientedMatroid& m, std::ostream& out) {
  out << "A\talpha_M(A)\ttheta_star\ttheta_star_bar\ttheta\ttheta_bar\n";
  for (ElementSet a : subsets(m.ground())) {
    auto p = reorientation_params(m, a);
    out << format_set(a) << '\t' << format_set(refined_alpha(m, a)) << '\t' << format_set(p.theta_star) << '\t'
        << format_set(p.theta_star_bar) << '\t' << format_set(p.theta) << '\t' << format_set(p.theta_bar) << '\n';
  }
  return kExitOk;
}

// Each check returns a counterexample description, or nothing.
using Check = std::function<std::optional<std::string>(const OrientedMatroid&)>;

std::optional<std::string> check_tutte(const OrientedMatroid& m) {
  auto t = tutte_from_bases(m);
  if (tutte_from_orientations(m) != t) return "orientation count gives " + tutte_from_orientations(m).to_string();
  if (tutte_delcon_oracle(m) != t) return "deletion/contraction gives " + tutte_delcon_oracle(m).to_string();
  if (!four_var_agree(m, t, false)) return std::string("subset expansion differs from t(x+u,y+v)");
  if (!four_var_agree(m, t, true)) return std::string("reorientation expansion differs from t(x+u,y+v)");
  return std::nullopt;
}

std::optional<std::string> check_full_optimality(const OrientedMatroid& m) {
  if (m.size() == 0) return std::nullopt;
  const Element p = m.ground().min();
  for (ElementSet a : subsets(m.ground())) {
    auto ma = reorient(m, a);
    if (!is_bounded(ma, p) && !is_dual_bounded(ma, p)) continue;
    int passing = 0;
    for (ElementSet b : bases(ma)) {
      const bool s = satisfies_sign_criterion(ma, b);
      if (s != satisfies_composition_criterion(ma, b))
        return "A=" + format_set(a) + " B=" + format_set(b) + ": sign and composition criteria disagree";
      passing += s;
    }
    if (passing != 1) return "A=" + format_set(a) + ": " + std::to_string(passing) + " fully optimal bases";
  }
  return std::nullopt;
}

std::optional<std::string> check_bijection(const OrientedMatroid& m) {
  std::map<std::uint32_t, std::vector<ElementSet>> pre;
  for (ElementSet a : subsets(m.ground())) {
    auto ma = reorient(m, a);
    const ElementSet b = active_basis(ma);
    auto ba = basis_activities(ma, b);
    auto oa = orientation_activities(ma);
    if (ba.internal != oa.dual_active || ba.external != oa.active)
      return "A=" + format_set(a) + ": activities of " + format_set(b) + " differ from those of the orientation";
    for (auto rule : {Induction::kLastDualActive, Induction::kLastActive, Induction::kAnyDualActive,
                      Induction::kAnyActive})
      for (auto dc : {DualBoundedCase::kDuality, DualBoundedCase::kCriterion, DualBoundedCase::kActiveDuality})
        if (active_basis_recursive(ma, rule, dc) != b) return "A=" + format_set(a) + ": recursive evaluation differs";
    if (active_basis(dual(ma)) != m.ground() - b) return "A=" + format_set(a) + ": dual basis is not the complement";
    if (m.size() > 1 && is_bounded(ma, m.ground().min()) && !check_active_duality(ma).ok())
      return "A=" + format_set(a) + ": active duality fails";
    pre[b.mask()].push_back(a);
  }
  for (ElementSet b : bases(m)) {
    auto act = basis_activities(m, b);
    auto got = pre[b.mask()];
    auto cls = alpha_inverse_class(m, b).class_members;
    std::sort(got.begin(), got.end());
    std::sort(cls.begin(), cls.end());
    if (got.size() != (std::size_t{1} << (act.internal.size() + act.external.size())) || got != cls)
      return "B=" + format_set(b) + ": preimage is not its activity class";
  }
  return std::nullopt;
}

std::optional<std::string> check_classes(const OrientedMatroid& m) {
  for (ElementSet a : subsets(m.ground())) {
    auto f = active_filtration_orientation(reorient(m, a));
    if (!is_connected_filtration(m, f)) return "A=" + format_set(a) + ": active filtration is not connected";
    int fixed = 0;
    for (ElementSet x : activity_class(m, a)) {
      if (active_filtration_orientation(reorient(m, x)) != f)
        return "A=" + format_set(a) + ": class member " + format_set(x) + " has another filtration";
      auto th = reorientation_params(m, x);
      fixed += th.theta_bar.empty() && th.theta_star_bar.empty();
    }
    if (fixed != 1) return "A=" + format_set(a) + ": class has " + std::to_string(fixed) + " fixed representatives";
  }
  return std::nullopt;
}

std::optional<std::string> check_refined(const OrientedMatroid& m) {
  std::vector<bool> hit(std::size_t{1} << m.size());
  for (ElementSet a : subsets(m.ground())) {
    const ElementSet x = refined_alpha(m, a);
    if (refined_alpha_inverse(m, x) != a) return "A=" + format_set(a) + ": inverse does not return A";
    auto th = reorientation_params(m, a);
    auto sp = subset_params(m, x);
    if (sp.internal != th.theta_star || sp.p != th.theta_star_bar || sp.external != th.theta || sp.q != th.theta_bar)
      return "A=" + format_set(a) + ": parameters not carried over";
    if (hit[x.mask()]) return "A=" + format_set(a) + ": image " + format_set(x) + " reached twice";
    hit[x.mask()] = true;
  }
  return std::nullopt;
}

int cmd_verify(const OrientedMatroid& m, std::ostream& out) {
  const std::pair<const char*, Check> checks[] = {
      {"tutte-routes", check_tutte},       {"full-optimality", check_full_optimality},
      {"canonical-bijection", check_bijection}, {"activity-classes", check_classes},
      {"refined-bijection", check_refined},
  };
  out << "check\tresult\n";
  for (const auto& [name, fn] : checks) {
    auto bad = fn(m);
    out << name << '\t' << (bad ? "FAIL" : "ok") << '\n';
    if (bad) {
      out << "counterexample\t" << *bad << '\n';
      return kExitVerifyFailed;
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Active bijection toolkit for oriented matroids given as graphs or signed circuit lists"};
  app.require_subcommand(1);
  std::string path, reorient_token = "-", basis_token;
  bool check = false;

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial from basis activities");
  tutte->add_option("file", path)->required();
  tutte->add_flag("--check", check, "also compare the other computations");
  auto* activities = app.add_subcommand("activities", "activities and active filtration of a reorientation");
  activities->add_option("file", path)->required();
  activities->add_option("--reorient", reorient_token, "elements to reorient");
  auto* alpha = app.add_subcommand("alpha", "active basis of a reorientation");
  alpha->add_option("file", path)->required();
  alpha->add_option("--reorient", reorient_token, "elements to reorient");
  auto* inverse = app.add_subcommand("alpha-inverse", "activity class mapped to a basis");
  inverse->add_option("file", path)->required();
  inverse->add_option("--basis", basis_token, "basis elements")->required();
  auto* table = app.add_subcommand("table", "canonical bijection table, one row per basis");
  table->add_option("file", path)->required();
  auto* refined = app.add_subcommand("refined", "refined bijection on all subsets");
  refined->add_option("file", path)->required();
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("file", path)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    const OrientedMatroid m = load(path);
    const int n = m.size();
    if (*tutte) return cmd_tutte(m, check, out);
    if (*activities) return cmd_activities(m, token(reorient_token, n, "reorientation"), out);
    if (*alpha) {
      out << format_set(active_basis(reorient(m, token(reorient_token, n, "reorientation")))) << '\n';
      return kExitOk;
    }
    if (*inverse) {
      const ElementSet b = token(basis_token, n, "basis");
      if (!is_basis(m, b)) throw BadInput(format_set(b) + " is not a basis");
      out << "reorientation\n";
      for (ElementSet a : alpha_inverse_class(m, b).class_members) out << format_set(a) << '\n';
      return kExitOk;
    }
    if (*table) return cmd_table(m, out);
    if (*refined) return cmd_refined(m, out);
    if (*verify) return cmd_verify(m, out);
  } catch (const BadInput& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  } catch (const EnumerationLimit& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitBadInput;
}

}  // namespace actbij
