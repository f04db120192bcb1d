// qh: exact engine for contracting standard q-deformed R-matrices into their
// jordanian h-deformed limits, with closed forms and verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 divergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "qh/contraction_sl2.hpp"
#include "qh/emit.hpp"
#include "qh/errors.hpp"
#include "qh/h_realization.hpp"
#include "qh/heisenberg.hpp"
#include "qh/sl2.hpp"
#include "qh/sl3.hpp"
#include "qh/strings.hpp"
#include "qh/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kDivergence = 3;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

qh::Rational parse_spin(const std::string& text) {
  qh::Rational j = qh::Rational::parse(text);
  if (j.sign() < 0 || !(j * qh::Rational(2)).is_integer())
    throw Usage("spin must be a nonnegative half-integer, got " + text);
  return j;
}

int parse_sym_label(const std::string& text) {
  std::string t = text;
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
    t = t.substr(1, t.size() - 2);
  const auto comma = t.find(',');
  if (comma == std::string::npos)
    throw Usage("sl3 representation must be 'fund' or 'n,0', got " + text);
  try {
    const int n = std::stoi(t.substr(0, comma));
    const int z = std::stoi(t.substr(comma + 1));
    if (n < 1 || z != 0) throw Usage("sl3 symmetric label needs n >= 1 and second index 0");
    return n;
  } catch (const Usage&) {
    throw;
  } catch (const std::exception&) {
    throw Usage("sl3 representation must be 'fund' or 'n,0', got " + text);
  }
}

void require_l_sl2(int L) {
  if (L <= 0 || L % 2 != 0) throw Usage("L must be a positive even integer");
}

void require_l_sl3(int L) {
  if (L <= 0 || L % 6 != 0) throw Usage("L must be a positive multiple of 6");
}

void emit_matrix(const std::string& command, const std::string& algebra,
                 const std::string& rep, int L, const std::string& format,
                 const qh::ExactMatrix& M,
                 const qh::ContractionReport* report) {
  if (format == "structured") {
    std::cout << qh::emission_json(command, algebra, rep, L, &M, report);
    return;
  }
  std::cout << qh::text_grid(M);
  if (report) std::cout << qh::report_text(*report);
}

struct MatrixJob {
  std::string algebra = "sl2";
  std::string jtext = "1/2";
  std::string reptext = "fund";
  int L = 6;
  std::string format = "text";

  void attach(CLI::App* cmd) {
    cmd->add_option("--algebra", algebra, "sl2 or sl3")
        ->check(CLI::IsMember({"sl2", "sl3"}));
    cmd->add_option("--j", jtext, "sl2 spin (fraction, e.g. 3/2)");
    cmd->add_option("--rep", reptext, "sl3 representation: fund or n,0");
    cmd->add_option("--L", L, "root order: q = u^L (even; multiple of 6 for sl3)");
    cmd->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  }
  qh::RingConfig ring() const { return qh::RingConfig{L}; }
  std::string rep_label() const { return algebra == "sl2" ? jtext : reptext; }
};

int cmd_rq(const MatrixJob& job) {
  if (job.algebra == "sl2") {
    require_l_sl2(job.L);
    qh::Sl2RepQ rep = qh::sl2_q_irrep(job.ring(), parse_spin(job.jtext));
    emit_matrix("rq", "sl2", job.jtext, job.L, job.format, qh::build_rq_sl2(rep),
                nullptr);
    return kOk;
  }
  require_l_sl3(job.L);
  qh::Sl3RepQ rep = job.reptext == "fund"
                        ? qh::sl3_fund_q(job.ring())
                        : qh::sl3_sym_irrep_q(job.ring(), parse_sym_label(job.reptext));
  emit_matrix("rq", "sl3", rep.label, job.L, job.format, qh::build_rq_sl3(rep),
              nullptr);
  return kOk;
}

int cmd_contract(const MatrixJob& job, const std::string& transform) {
  qh::ContractionReport report;
  std::string label = job.rep_label();
  if (job.algebra == "sl2") {
    require_l_sl2(job.L);
    const qh::Rational j = parse_spin(job.jtext);
    if (transform == "none") {
      qh::Sl2RepQ rep = qh::sl2_q_irrep(job.ring(), j);
      report = qh::limit_mat(qh::build_rq_sl2(rep), "sl2 untransformed limit");
    } else {
      report = qh::contract_sl2(job.ring(), j);
    }
  } else {
    require_l_sl3(job.L);
    qh::Sl3RepQ rep =
        job.reptext == "fund"
            ? qh::sl3_fund_q(job.ring())
            : qh::sl3_sym_irrep_q(job.ring(), parse_sym_label(job.reptext));
    label = rep.label;
    if (transform == "none")
      report = qh::limit_mat(qh::build_rq_sl3(rep), "sl3 untransformed limit");
    else
      report = qh::contract_sl3(rep);
  }

  if (!report.finite()) {
    if (job.format == "structured")
      std::cout << qh::emission_json("contract", job.algebra, label, job.L, nullptr,
                                     &report);
    else
      std::cout << qh::report_text(report);
    return kDivergence;
  }
  emit_matrix("contract", job.algebra, label, job.L, job.format,
              qh::to_exact(*report.limit), &report);
  return kOk;
}

int cmd_closed(const MatrixJob& job) {
  if (job.algebra == "sl2") {
    qh::LimitMatrix R = qh::rh_closed_sl2(qh::sl2_classical_irrep(parse_spin(job.jtext)));
    emit_matrix("closed", "sl2", job.jtext, job.L, job.format, qh::to_exact(R),
                nullptr);
    return kOk;
  }
  require_l_sl3(job.L);
  qh::Sl3RepQ rep = job.reptext == "fund"
                        ? qh::sl3_fund_q(job.ring())
                        : qh::sl3_sym_irrep_q(job.ring(), parse_sym_label(job.reptext));
  qh::LimitMatrix R = qh::rh_closed_sl3(qh::sl3_classical(rep));
  emit_matrix("closed", "sl3", rep.label, job.L, job.format, qh::to_exact(R), nullptr);
  return kOk;
}

int cmd_universal(const std::string& j1text, const std::string& j2text, int L,
                  const std::string& format) {
  qh::Sl2RepClassical a = qh::sl2_classical_irrep(parse_spin(j1text));
  qh::Sl2RepClassical b = qh::sl2_classical_irrep(parse_spin(j2text));
  qh::LimitMatrix R = qh::universal_rh(a, b);
  emit_matrix("universal", "sl2", j1text + " x " + j2text, L, format,
              qh::to_exact(R), nullptr);
  return kOk;
}

int cmd_coeffs(int order, const std::string& sign_text, int L,
               const std::string& format) {
  if (order < 0) throw Usage("order must be nonnegative");
  int sign = 0;
  if (sign_text == "+" || sign_text == "+1")
    sign = +1;
  else if (sign_text == "-" || sign_text == "-1")
    sign = -1;
  else
    throw Usage("sign must be + or -");
  require_l_sl2(L);

  std::vector<qh::Rational> cs;
  try {
    cs = qh::c_coefficients(qh::RingConfig{L}, order, sign);
  } catch (const qh::Error& e) {
    std::cerr << "divergent coefficient: " << e.what() << "\n";
    return kDivergence;
  }
  if (format == "structured") {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& v : cs) coeffs.push_back(qh::to_string(v));
    nlohmann::json out{{"command", "coeffs"},
                       {"sign", sign > 0 ? "+" : "-"},
                       {"L", L},
                       {"coefficients", coeffs}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t n = 0; n < cs.size(); ++n)
    std::cout << "c_" << n << " = " << qh::to_string(cs[n]) << "\n";
  return kOk;
}

int cmd_heisenberg(const std::string& map, int order, const std::string& format) {
  if (order < 5) throw Usage("order must be at least 5");
  qh::HeisPair pair = map == "tilde" ? qh::heis_tilde(order) : qh::heis_hat(order);
  qh::RelationCheck check = qh::heis_commutator_check(pair, order - 3);
  if (format == "structured") {
    nlohmann::json out{{"command", "heisenberg"},
                       {"map", map},
                       {"order", order},
                       {"window", order - 3},
                       {"pass", check.pass}};
    std::cout << out.dump(2) << "\n";
  } else {
    qh::RelationReport rpt;
    rpt.checks.push_back(check);
    std::cout << qh::relation_report_text(rpt);
  }
  return check.pass ? kOk : kVerifyFail;
}

int cmd_verify(const std::string& suite, const qh::VerifyOptions& opt) {
  std::vector<qh::CheckResult> results;
  if (suite == "all") {
    for (const auto& name : qh::suite_names()) {
      auto r = qh::run_suite(name, opt);
      results.insert(results.end(), r.begin(), r.end());
    }
  } else {
    results = qh::run_suite(suite, opt);
  }
  std::cout << qh::check_results_text(results);
  const bool ok = qh::all_pass(results);
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << " ("
            << results.size() << " checks)\n";
  return ok ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact contraction engine: q-deformed R-matrices to their jordanian "
      "h-deformed limits"};
  app.require_subcommand(1);

  MatrixJob rq_job, con_job, closed_job;
  std::string transform = "qexp";

  CLI::App* rq = app.add_subcommand("rq", "emit the standard q-deformed R-matrix");
  rq_job.attach(rq);

  CLI::App* con = app.add_subcommand(
      "contract", "similarity-transform the R-matrix and take the exact q -> 1 limit");
  con_job.attach(con);
  con->add_option("--transform", transform,
                  "qexp (default) or none (control: skip the singular transform)")
      ->check(CLI::IsMember({"qexp", "none"}));

  CLI::App* closed =
      app.add_subcommand("closed", "emit the closed-form h-deformed R-matrix");
  closed_job.attach(closed);

  std::string j1text = "1/2", j2text = "1/2", uformat = "text";
  int uL = 6;
  CLI::App* uni = app.add_subcommand(
      "universal", "evaluate the two-exponential form on a spin pair");
  uni->add_option("--j1", j1text, "first spin");
  uni->add_option("--j2", j2text, "second spin");
  uni->add_option("--L", uL, "root order (metadata only)");
  uni->add_option("--format", uformat, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  int order = 12, cL = 6;
  std::string sign_text = "+", cformat = "text";
  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "limit coefficients of the transformed q-exponential ratio");
  coeffs->add_option("--order", order, "highest coefficient index");
  coeffs->add_option("--sign", sign_text, "+ or -");
  coeffs->add_option("--L", cL, "root order");
  coeffs->add_option("--format", cformat, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string hmap = "hat", hformat = "text";
  int horder = 12;
  CLI::App* heis = app.add_subcommand(
      "heisenberg", "canonical-transform commutator check on truncated polynomials");
  heis->add_option("--map", hmap, "hat (arcsinh) or tilde (arctanh)")
      ->check(CLI::IsMember({"hat", "tilde"}));
  heis->add_option("--order", horder, "truncation degree");
  heis->add_option("--format", hformat, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string suite = "all", jmax_text = "3", corrupt;
  int vL = 6, nmax = 3, heis_order = 12;
  unsigned seed = 20260816;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  {
    std::vector<std::string> allowed = qh::suite_names();
    allowed.push_back("all");
    verify->add_option("--suite", suite, "suite name or all")
        ->check(CLI::IsMember(allowed));
  }
  verify->add_option("--jmax", jmax_text, "largest sl2 spin");
  verify->add_option("--nmax", nmax, "largest sl3 symmetric label");
  verify->add_option("--heis-order", heis_order, "Heisenberg truncation degree");
  verify->add_option("--L", vL, "root order (multiple of 6)");
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--corrupt", corrupt,
                     "negative-control hook; only value: yhat")
      ->check(CLI::IsMember({"yhat"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (rq->parsed()) return cmd_rq(rq_job);
    if (con->parsed()) return cmd_contract(con_job, transform);
    if (closed->parsed()) return cmd_closed(closed_job);
    if (uni->parsed()) return cmd_universal(j1text, j2text, uL, uformat);
    if (coeffs->parsed()) return cmd_coeffs(order, sign_text, cL, cformat);
    if (heis->parsed()) return cmd_heisenberg(hmap, horder, hformat);
    if (verify->parsed()) {
      require_l_sl3(vL);
      qh::VerifyOptions opt;
      opt.ring.L = vL;
      opt.jmax = parse_spin(jmax_text);
      opt.sl3_nmax = nmax;
      opt.heis_order = heis_order;
      opt.seed = seed;
      opt.corrupt_yhat = corrupt == "yhat";
      return cmd_verify(suite, opt);
    }
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const qh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
