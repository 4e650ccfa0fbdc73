#include "tempora/causal.hpp"

#include <cmath>
#include <functional>

#include "tempora/errors.hpp"
#include "tempora/pdm.hpp"
#include "tempora/procmat.hpp"
#include "tempora/simplex.hpp"

namespace tempora {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

// Digit d of a base-k code, least significant first.
std::size_t digit(std::size_t code, std::size_t k, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) code /= k;
  return code % k;
}

void require_binary(const CorrelationTable& t) {
  if (t.m_a != 2 || t.m_b != 2 || t.k_a != 2 || t.k_b != 2)
    throw DimensionError("GYNI/LGYNI need two inputs and two outputs per party");
}

// Choi operators of the demo instruments on (in, out), indexed [x][a].
std::vector<std::vector<CMatrix>> demo_operations(DemoOps ops) {
  const CMatrix zero(4, 4);
  CMatrix phi = CMatrix::column(std::vector<cplx>{1, 0, 0, 1});
  const CMatrix bell = projector_onto(phi);
  std::vector<std::vector<CMatrix>> out(2);
  out[0] = {zero, bell};
  for (std::size_t a = 0; a < 2; ++a) {
    const CMatrix pa = CMatrix::basis_projector(2, a);
    if (ops == DemoOps::Reprepare) out[1].push_back(kron(pa, CMatrix::basis_projector(2, 0)));
    else out[1].push_back(0.5 * kron(pa, CMatrix::identity(2)));
  }
  return out;
}

CorrelationTable table_from(const std::function<double(std::size_t, std::size_t, std::size_t, std::size_t)>& prob) {
  CorrelationTable t(2, 2, 2, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) t.at(a, b, x, y) = prob(a, b, x, y);
  return t;
}

ProcessMatrix demo_process_matrix() {
  const double s = M_SQRT1_2;
  CMatrix w = CMatrix::identity(16);
  w += s * pauli_matrix(PauliString{3, 3, 3, 0});
  w += s * pauli_matrix(PauliString{3, 0, 1, 1});
  return ProcessMatrix{0.25 * w, SpaceSpec{{"A_I", 2}, {"A_O", 2}, {"B_I", 2}, {"B_O", 2}}};
}

CorrelationTable demo_pm(DemoOps ops) {
  const ProcessMatrix w = demo_process_matrix();
  const auto op = demo_operations(ops);
  return table_from([&](std::size_t a, std::size_t b, std::size_t x, std::size_t y) {
    return pm_probability(w, op[x][a], op[y][b]);
  });
}

CorrelationTable demo_pdm(DemoOps ops) {
  // Four events A_I, A_O, B_I, B_O with classical input registers X (before A) and Y (after B).
  const double s = M_SQRT1_2;
  const Pdm r = pdm_from_correlations(4, {{PauliString{0, 0, 0, 0}, 1.0},
                                          {PauliString{3, 3, 3, 0}, s},
                                          {PauliString{3, 0, 1, 1}, s}});
  const SpaceSpec ev = SpaceSpec{{"A_I", 2}, {"A_O", 2}, {"B_I", 2}, {"B_O", 2}};
  const CMatrix rt = partial_transpose(r.matrix, ev, {"A_I", "A_O", "B_I", "B_O"});
  const auto op = demo_operations(ops);
  // Operations controlled on the input registers: sum_x |x><x| ⊗ A_{a|x}.
  auto controlled_a = [&](std::size_t a) {
    CMatrix m(8, 8);
    for (std::size_t x = 0; x < 2; ++x) m += kron(CMatrix::basis_projector(2, x), op[x][a]);
    return m;
  };
  auto controlled_b = [&](std::size_t b) {
    CMatrix m(8, 8);
    for (std::size_t y = 0; y < 2; ++y) m += kron(op[y][b], CMatrix::basis_projector(2, y));
    return m;
  };
  const double out_events = 4.0;  // 2^{number of output events}
  return table_from([&](std::size_t a, std::size_t b, std::size_t x, std::size_t y) {
    const CMatrix state = kron({CMatrix::basis_projector(2, x), rt, CMatrix::basis_projector(2, y)});
    return out_events * trace_of_product(state, kron(controlled_a(a), controlled_b(b))).real();
  });
}

}  // namespace

CorrelationTable::CorrelationTable(std::size_t ma, std::size_t mb, std::size_t ka, std::size_t kb)
    : m_a(ma), m_b(mb), k_a(ka), k_b(kb), p(ma * mb * ka * kb, 0.0) {
  if (ma == 0 || mb == 0 || ka == 0 || kb == 0) throw DimensionError("correlation table counts must be >= 1");
}

void CorrelationTable::validate() const {
  if (p.size() != m_a * m_b * k_a * k_b) throw DimensionError("correlation table has the wrong number of entries");
  for (double v : p)
    if (!std::isfinite(v) || v < -1e-10) throw ValidationError("correlation table has a negative entry");
  for (std::size_t x = 0; x < m_a; ++x)
    for (std::size_t y = 0; y < m_b; ++y) {
      double s = 0.0;
      for (std::size_t a = 0; a < k_a; ++a)
        for (std::size_t b = 0; b < k_b; ++b) s += at(a, b, x, y);
      if (std::abs(s - 1.0) > 1e-10) throw ValidationError("correlation table is not normalised");
    }
}

double causal_vertex_count(std::size_t m_a, std::size_t m_b, std::size_t k_a, std::size_t k_b) {
  const double ka = double(k_a), kb = double(k_b), ma = double(m_a), mb = double(m_b);
  return std::pow(ka, ma) * std::pow(kb, ma * mb) + std::pow(ka, ma * mb) * std::pow(kb, mb) -
         std::pow(ka, ma) * std::pow(kb, mb);
}

std::vector<CorrelationTable> enumerate_causal_vertices(std::size_t m_a, std::size_t m_b, std::size_t k_a,
                                                        std::size_t k_b, std::size_t limit) {
  if (m_a == 0 || m_b == 0 || k_a == 0 || k_b == 0) throw DimensionError("counts must be >= 1");
  const double count = causal_vertex_count(m_a, m_b, k_a, k_b);
  if (count > double(limit)) throw SizeLimitExceeded("causal polytope has too many vertices");

  std::vector<CorrelationTable> out;
  out.reserve(static_cast<std::size_t>(count));
  const std::size_t nfa = ipow(k_a, m_a), ngb = ipow(k_b, m_a * m_b);
  // A before B: a = f(x), b = g(x, y).
  for (std::size_t f = 0; f < nfa; ++f)
    for (std::size_t g = 0; g < ngb; ++g) {
      CorrelationTable t(m_a, m_b, k_a, k_b);
      for (std::size_t x = 0; x < m_a; ++x)
        for (std::size_t y = 0; y < m_b; ++y) t.at(digit(f, k_a, x), digit(g, k_b, x * m_b + y), x, y) = 1.0;
      out.push_back(std::move(t));
    }
  // B before A: b = g(y), a = f(x, y). Skip f independent of y; those are already listed.
  const std::size_t ngb2 = ipow(k_b, m_b), nfa2 = ipow(k_a, m_a * m_b);
  for (std::size_t f = 0; f < nfa2; ++f) {
    bool depends_on_y = false;
    for (std::size_t x = 0; x < m_a && !depends_on_y; ++x)
      for (std::size_t y = 1; y < m_b; ++y)
        if (digit(f, k_a, x * m_b + y) != digit(f, k_a, x * m_b)) {
          depends_on_y = true;
          break;
        }
    if (!depends_on_y) continue;
    for (std::size_t g = 0; g < ngb2; ++g) {
      CorrelationTable t(m_a, m_b, k_a, k_b);
      for (std::size_t x = 0; x < m_a; ++x)
        for (std::size_t y = 0; y < m_b; ++y) t.at(digit(f, k_a, x * m_b + y), digit(g, k_b, y), x, y) = 1.0;
      out.push_back(std::move(t));
    }
  }
  return out;
}

double facet_value(const CorrelationTable& t, Facet kind) {
  require_binary(t);
  double s = 0.0;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) {
          bool hit;
          if (kind == Facet::GYNI) hit = a == y && b == x;
          else hit = (x * (a ^ y)) == 0 && (y * (b ^ x)) == 0;
          if (hit) s += t.at(a, b, x, y);
        }
  return 0.25 * s;
}

bool is_causal(const CorrelationTable& t, double tol) {
  if (t.p.size() != t.m_a * t.m_b * t.k_a * t.k_b) throw DimensionError("correlation table has the wrong size");
  const auto verts = enumerate_causal_vertices(t.m_a, t.m_b, t.k_a, t.k_b);
  const std::size_t nv = verts.size(), nc = t.p.size();
  // Variables: lambda (nv), s_plus (nc), s_minus (nc).
  const std::size_t cols = nv + 2 * nc, rows = 1 + 2 * nc;
  std::vector<double> a(rows * cols, 0.0), b(rows, 0.0);
  for (std::size_t v = 0; v < nv; ++v) a[v] = 1.0;
  b[0] = 1.0;
  for (std::size_t c = 0; c < nc; ++c) {
    const std::size_t up = 1 + c, lo = 1 + nc + c;
    for (std::size_t v = 0; v < nv; ++v) {
      a[up * cols + v] = verts[v].p[c];
      a[lo * cols + v] = verts[v].p[c];
    }
    a[up * cols + nv + c] = 1.0;        //  sum lambda v_c + s+ = t_c + tol
    a[lo * cols + nv + nc + c] = -1.0;  //  sum lambda v_c - s- = t_c - tol
    b[up] = t.p[c] + tol;
    b[lo] = t.p[c] - tol;
  }
  return phase_one_feasible(a, b, cols, kCausalTol).feasible;
}

ViolationReport indefinite_order_demo(DemoRoute route, DemoOps ops) {
  ViolationReport rep;
  rep.table = route == DemoRoute::PM ? demo_pm(ops) : demo_pdm(ops);
  rep.gyni = facet_value(rep.table, Facet::GYNI);
  rep.lgyni = facet_value(rep.table, Facet::LGYNI);
  rep.causal = is_causal(rep.table);
  return rep;
}

double expected_gyni_violation() { return 5.0 / 16.0 * (1.0 + M_SQRT1_2); }

std::string to_string(DemoRoute r) { return r == DemoRoute::PM ? "pm" : "pdm"; }
std::string to_string(DemoOps o) { return o == DemoOps::Reprepare ? "reprepare" : "half-identity"; }

DemoRoute parse_route(const std::string& s) {
  if (s == "pm") return DemoRoute::PM;
  if (s == "pdm") return DemoRoute::PDM;
  throw ValidationError("route must be 'pm' or 'pdm'");
}

DemoOps parse_ops(const std::string& s) {
  if (s == "reprepare") return DemoOps::Reprepare;
  if (s == "half-identity") return DemoOps::HalfIdentity;
  throw ValidationError("ops must be 'reprepare' or 'half-identity'");
}

}  // namespace tempora
