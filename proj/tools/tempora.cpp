// tempora: command-line driver.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tempora/causal.hpp"
#include "tempora/errors.hpp"
#include "tempora/histories.hpp"
#include "tempora/json_io.hpp"
#include "tempora/oscillator.hpp"
#include "tempora/otoc.hpp"
#include "tempora/pdm.hpp"
#include "tempora/procmat.hpp"
#include "tempora/random.hpp"
#include "tempora/report.hpp"
#include "tempora/siggames.hpp"
#include "tempora/verify.hpp"

using namespace tempora;

namespace {

struct RunConfig {
  double tol = kEquivalenceTol;
  std::uint64_t seed = 0;
  std::string format;  // empty: subcommand default
  std::string output;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double default_tol() {
  if (const char* env = std::getenv("TEMPORA_TOL")) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("TEMPORA_TOL is not a number: ") + env);
  }
  return kEquivalenceTol;
}

void emit(const RunConfig& cfg, json report, Format fallback = Format::JSON) {
  const Format fmt = cfg.format.empty() ? fallback : parse_format(cfg.format);
  if (fmt == Format::JSON) report["seed"] = cfg.seed;
  const std::string text = serialize(report, fmt);
  if (cfg.output.empty()) {
    std::cout << text << (fmt == Format::JSON ? "\n" : "");
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + cfg.output);
  out << text << (fmt == Format::JSON ? "\n" : "");
}

template <class T>
T load_as(const std::string& path) {
  return load_json_file(path).get<T>();
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    try {
      out.push_back(std::stod(item, &pos));
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) throw UsageError("not a number list: " + s);
  }
  return out;
}

json correlations_json(const CorrelationMap& m) {
  json j = json::object();
  for (const auto& [p, v] : m) j[p.to_string()] = v;
  return j;
}

json check_list(const std::vector<CheckResult>& rs, bool& ok) {
  json arr = json::array();
  ok = true;
  for (const auto& r : rs) {
    arr.push_back(to_json(r));
    ok = ok && r.passed;
  }
  return arr;
}

CMatrix qubit_ops(std::size_t n, std::size_t site, const CMatrix& op) {
  CMatrix m = CMatrix::identity(1);
  for (std::size_t k = 0; k < n; ++k) m = kron(m, k == site ? op : CMatrix::identity(2));
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal quantum correlations across five formalisms"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  try {
    cfg.tol = default_tol();
    if (!(cfg.tol > 0 && cfg.tol <= 1e-2)) throw UsageError("TEMPORA_TOL must lie in (0, 1e-2]");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  app.add_option("--tol", cfg.tol, "Comparison tolerance for equivalence checks (env TEMPORA_TOL)")
      ->check(CLI::Validator(
          [](std::string& s) -> std::string {
            double v = 0;
            try {
              v = std::stod(s);
            } catch (const std::exception&) {
              return "tol must be a number";
            }
            return v > 0 && v <= 1e-2 ? "" : "tol must lie in (0, 1e-2]";
          },
          "(0, 1e-2]"));
  app.add_option("--seed", cfg.seed, "Seed for the mt19937_64 generator");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", cfg.output, "Write the report here instead of stdout");

  int status = 0;

  // pdm ---------------------------------------------------------------------
  auto* pdm = app.add_subcommand("pdm", "Two-event PDM of a qubit sent through a channel");
  std::string pdm_rho, pdm_channel, pdm_eta;
  pdm->add_option("--rho", pdm_rho, "Initial state (matrix JSON); default 1/2")->check(CLI::ExistingFile);
  pdm->add_option("--channel", pdm_channel, "Channel (Kraus JSON); default identity")->check(CLI::ExistingFile);
  pdm->add_option("--postselect", pdm_eta, "Post-selection state (matrix JSON)")->check(CLI::ExistingFile);
  pdm->callback([&] {
    const CMatrix rho = pdm_rho.empty() ? CMatrix::identity(2) / 2.0 : load_as<CMatrix>(pdm_rho);
    const Channel ch = pdm_channel.empty() ? Channel::identity(2) : load_as<Channel>(pdm_channel);
    const Pdm r = pdm_bipartite_channel(rho, ch);
    const double marg = max_abs_diff(partial_trace(r.matrix, SpaceSpec{{"A", 2}, {"B", 2}}, {"A"}), rho);
    json rep{{"pdm", r},
             {"min_eig", min_eigenvalue(r.matrix)},
             {"negativity", pdm_negativity(r)},
             {"marginal_error", marg},
             {"correlations", correlations_json(pdm_correlations(r))}};
    if (!pdm_eta.empty()) rep["postselected"] = pdm_postselected(rho, ch, load_as<CMatrix>(pdm_eta));
    if (marg > cfg.tol) status = 1;
    emit(cfg, rep);
  });

  // procmat -----------------------------------------------------------------
  auto* proc = app.add_subcommand("procmat", "Process-matrix validity, classification, equivalence");
  proc->require_subcommand(1);
  auto* pv = proc->add_subcommand("validate", "Check PSD, trace and L_V conditions");
  std::string pv_in;
  pv->add_option("input", pv_in, "Process matrix JSON")->required()->check(CLI::ExistingFile);
  pv->callback([&] {
    const auto w = load_as<ProcessMatrix>(pv_in);
    const auto v = validate_process_matrix(w);
    json rep{{"psd", v.psd},     {"trace_ok", v.trace_ok}, {"lv_fixed", v.lv_fixed},      {"min_eig", v.min_eig},
             {"trace", v.trace}, {"valid", v.valid()},     {"lv_residual", v.lv_residual}};
    if (!v.valid()) status = 1;
    emit(cfg, rep);
  });
  auto* pc = proc->add_subcommand("classify", "Sort Pauli coefficients by causal class");
  std::string pc_in;
  pc->add_option("input", pc_in, "Process matrix JSON")->required()->check(CLI::ExistingFile);
  pc->callback([&] {
    const auto h = hs_classify(load_as<ProcessMatrix>(pc_in));
    auto terms = [](const std::vector<HsTerm>& ts) {
      json o = json::object();
      for (const auto& t : ts) o[t.letters.to_string()] = t.coeff;
      return o;
    };
    emit(cfg, json{{"identity", h.identity},
                   {"a_to_b", terms(h.a_to_b)},
                   {"b_to_a", terms(h.b_to_a)},
                   {"separate", terms(h.separate)},
                   {"forbidden", terms(h.forbidden)}});
  });
  auto* pe = proc->add_subcommand("equivalence", "Process-matrix vs PDM correlations on random (rho, U)");
  std::size_t pe_count = 100;
  pe->add_option("--count", pe_count, "Number of random instances");
  pe->callback([&] {
    const auto r = verify_pm_pdm(cfg.seed, pe_count, cfg.tol);
    if (!r.passed) status = 1;
    emit(cfg, to_json(r));
  });

  // causal ------------------------------------------------------------------
  auto* causal = app.add_subcommand("causal", "Causal polytope and inequality violations");
  causal->require_subcommand(1);
  auto* cd = causal->add_subcommand("demo", "GYNI/LGYNI violation from the indefinite-order process");
  std::string route = "pm", ops = "reprepare";
  cd->add_option("--route", route, "pm or pdm")->check(CLI::IsMember({"pm", "pdm"}));
  cd->add_option("--ops", ops, "Operation set")->check(CLI::IsMember({"reprepare", "half-identity"}));
  bool cd_table = false;
  cd->add_flag("--table", cd_table, "Include the correlation table");
  cd->callback([&] {
    const auto r = indefinite_order_demo(parse_route(route), parse_ops(ops));
    json rep{{"route", route}, {"ops", ops}, {"gyni", r.gyni}, {"lgyni", r.lgyni}, {"causal", r.causal}};
    if (cd_table) rep["table"] = r.table;
    emit(cfg, rep);
  });
  auto* cv = causal->add_subcommand("vertices", "Count the deterministic causal strategies");
  std::size_t ma = 2, mb = 2, ka = 2, kb = 2;
  cv->add_option("--ma", ma)->check(CLI::PositiveNumber);
  cv->add_option("--mb", mb)->check(CLI::PositiveNumber);
  cv->add_option("--ka", ka)->check(CLI::PositiveNumber);
  cv->add_option("--kb", kb)->check(CLI::PositiveNumber);
  cv->callback([&] {
    const auto v = enumerate_causal_vertices(ma, mb, ka, kb);
    json rep{{"vertices", v.size()}, {"formula", causal_vertex_count(ma, mb, ka, kb)}};
    if (ma == 2 && mb == 2 && ka == 2 && kb == 2) {
      double g = 0, l = 0;
      for (const auto& t : v) {
        g = std::max(g, facet_value(t, Facet::GYNI));
        l = std::max(l, facet_value(t, Facet::LGYNI));
      }
      rep["max_gyni"] = g;
      rep["max_lgyni"] = l;
    }
    if (double(v.size()) != causal_vertex_count(ma, mb, ka, kb)) status = 1;
    emit(cfg, rep);
  });
  auto* cc = causal->add_subcommand("check", "Causal membership of a correlation table");
  std::string cc_in;
  cc->add_option("input", cc_in, "Correlation table JSON")->required()->check(CLI::ExistingFile);
  cc->callback([&] {
    const auto t = load_as<CorrelationTable>(cc_in);
    t.validate();
    json rep{{"causal", is_causal(t)}};
    if (t.m_a == 2 && t.m_b == 2 && t.k_a == 2 && t.k_b == 2) {
      rep["gyni"] = facet_value(t, Facet::GYNI);
      rep["lgyni"] = facet_value(t, Facet::LGYNI);
    }
    emit(cfg, rep);
  });

  // histories ---------------------------------------------------------------
  auto* hist = app.add_subcommand("histories", "Decoherence functional of a history family");
  std::string h_in;
  std::size_t h_steps = 2, h_qubits = 1;
  hist->add_option("--input", h_in, "History family JSON; default a random Pauli family")->check(CLI::ExistingFile);
  hist->add_option("--steps", h_steps, "Steps of the random family")->check(CLI::Range(1, 4));
  hist->add_option("--qubits", h_qubits, "Qubits of the random family")->check(CLI::Range(1, 2));
  hist->callback([&] {
    HistoryFamily f;
    json rep = json::object();
    if (h_in.empty()) {
      Rng rng(cfg.seed);
      const auto inst = random_history_instance(rng, h_steps, h_qubits);
      f = pauli_history_family(inst.rho, inst.unitaries, inst.paulis);
      std::vector<Instrument> ins;
      for (const auto& p : inst.paulis) ins.push_back(Instrument::from_observable(pauli_matrix(p)));
      std::vector<Channel> chs;
      for (const auto& u : inst.unitaries) chs.push_back(Channel::unitary(u));
      const double h = correlation_from_histories(inst.rho, inst.unitaries, inst.paulis);
      const double s = sequential_correlation(inst.rho, ins, chs);
      json ps = json::array();
      for (const auto& p : inst.paulis) ps.push_back(p.to_string());
      rep["paulis"] = ps;
      rep["correlation_histories"] = h;
      rep["correlation_pdm"] = s;
      if (std::abs(h - s) > cfg.tol) status = 1;
    } else {
      f = load_as<HistoryFamily>(h_in);
    }
    const auto probs = history_probabilities(f);
    json pj = json::array();
    for (std::size_t k = 0; k < probs.values.size(); ++k)
      pj.push_back(json{{"history", probs.histories[k]}, {"p", probs.values[k]}});
    rep["probabilities"] = pj;
    rep["weak_consistent"] = is_consistent(f, false);
    rep["strong_consistent"] = is_consistent(f, true);
    rep["max_off_diagonal"] = max_off_diagonal(f, true);
    rep["decoherence_matrix"] = decoherence_matrix(f);
    emit(cfg, rep);
  });

  // games -------------------------------------------------------------------
  auto* games = app.add_subcommand("games", "CHSH and quantum-classical signalling games");
  games->require_subcommand(1);
  auto* gc = games->add_subcommand("chsh", "Classical and quantum CHSH values");
  gc->callback([&] {
    const auto ang = chsh_optimal_angles();
    const CMatrix phi = projector_onto(CMatrix::column(std::vector<cplx>{M_SQRT1_2, 0, 0, M_SQRT1_2}));
    const double q = chsh_quantum_value(phi, ang);
    const double sg = qcsg_payoff(GameSpec::chsh(), chsh_as_signalling_game(ang), classical_questions(2),
                                  classical_questions(2));
    emit(cfg, json{{"classical", chsh_classical_optimum()},
                   {"quantum", q},
                   {"signalling_game_payoff", sg},
                   {"angles", ang},
                   {"tsirelson", std::pow(std::cos(M_PI / 8), 2)}});
  });
  auto* gq = games->add_subcommand("qcsg", "Random-restart payoff sweep over CHSH signalling-game strategies");
  std::size_t gq_samples = 200;
  std::string gq_strategy;
  gq->add_option("--samples", gq_samples, "Random angle draws")->check(CLI::PositiveNumber);
  gq->add_option("--strategy", gq_strategy, "Strategy JSON: report its temporal correlation at tau = 1/d")
      ->check(CLI::ExistingFile);
  gq->callback([&] {
    json rep = json::object();
    if (!gq_strategy.empty()) {
      const auto s = load_as<Strategy>(gq_strategy);
      const std::size_t d = s.first.front().dim_in();
      rep["temporal_correlation"] = qcsg_temporal_correlation(s, CMatrix::identity(d) / double(d));
    }
    Rng rng(cfg.seed);
    std::uniform_real_distribution<double> ang(-M_PI, M_PI);
    const GameSpec g = GameSpec::chsh();
    const auto q = classical_questions(2);
    double best = 0.0;
    std::array<double, 4> best_angles{};
    for (std::size_t k = 0; k < gq_samples; ++k) {
      const std::array<double, 4> a{ang(rng), ang(rng), ang(rng), ang(rng)};
      const double v = qcsg_payoff(g, chsh_as_signalling_game(a), q, q);
      if (v > best) {
        best = v;
        best_angles = a;
      }
    }
    rep["samples"] = gq_samples;
    rep["best_payoff"] = best;
    rep["best_angles"] = best_angles;
    emit(cfg, rep);
  });

  // otoc --------------------------------------------------------------------
  auto* otoc = app.add_subcommand("otoc", "Direct vs PDM-route OTOC on a random Hamiltonian");
  std::size_t o_qubits = 2;
  double o_beta = 0.0, o_time = 1.0;
  otoc->add_option("--qubits", o_qubits, "System size")->check(CLI::Range(1, 6));
  otoc->add_option("--beta", o_beta, "Inverse temperature of the background state")->check(CLI::NonNegativeNumber);
  otoc->add_option("--time", o_time, "Evolution time");
  otoc->callback([&] {
    Rng rng(cfg.seed);
    const std::size_t d = std::size_t{1} << o_qubits;
    const CMatrix h = random_hermitian(rng, d);
    const CMatrix u = evolution_unitary(h, o_time);
    const CMatrix a = qubit_ops(o_qubits, 0, CMatrix::basis_projector(2, 0));
    const CMatrix b = qubit_ops(o_qubits, o_qubits - 1, pauli(3));
    const CMatrix rho = thermal_state(h, o_beta);
    const cplx direct = otoc_direct(OtocSpec{a, b, u, rho});
    const double via = otoc_via_pdm(a, b, u, rho);
    const double diff = std::abs(via - direct.real());
    if (o_beta == 0.0 && diff > cfg.tol) status = 1;
    emit(cfg, json{{"direct", json{{"re", direct.real()}, {"im", direct.imag()}}},
                   {"via_pdm", via},
                   {"abs_diff", diff},
                   {"equivalence_expected", o_beta == 0.0},
                   {"qubits", o_qubits},
                   {"beta", o_beta},
                   {"time", o_time}});
  });

  // oscillator --------------------------------------------------------------
  auto* osc = app.add_subcommand("oscillator", "Amplitude vs probability measure correlators (CSV by default)");
  OscParams op;
  std::string taus = "0.5,1,2,3";
  osc->add_option("--beta", op.beta)->check(CLI::PositiveNumber);
  osc->add_option("--omega", op.omega)->check(CLI::PositiveNumber);
  osc->add_option("--mass", op.m)->check(CLI::PositiveNumber);
  osc->add_option("--hbar", op.hbar)->check(CLI::PositiveNumber);
  osc->add_option("--n", op.n_lattice, "Lattice sites")->check(CLI::Range(8, 1 << 20));
  osc->add_option("--taus", taus, "Comma-separated separations");
  osc->callback([&] {
    std::vector<std::vector<double>> rows;
    for (const auto& r : measure_discrepancy_report(op, parse_list(taus)))
      rows.push_back({r.tau, r.amplitude, r.probability, r.lattice, r.rel_gap});
    emit(cfg, make_table({"tau", "amplitude", "probability", "lattice", "rel_gap"}, rows), Format::CSV);
  });

  // verify-all --------------------------------------------------------------
  auto* va = app.add_subcommand("verify-all", "Run every cross-formalism check");
  va->callback([&] {
    bool ok = true;
    json checks = check_list(verify_all(cfg.seed, cfg.tol), ok);
    if (!ok) status = 1;
    emit(cfg, json{{"checks", checks}, {"passed", ok}, {"tol", cfg.tol}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
