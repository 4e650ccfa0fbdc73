#pragma once

// Bipartite causal correlations: polytope vertices, GYNI/LGYNI, membership.

#include <cstddef>
#include <string>
#include <vector>

namespace tempora {

inline constexpr std::size_t kVertexLimit = 1000000;
inline constexpr double kCausalTol = 1e-8;

// p(a, b | x, y) with x < m_a, y < m_b, a < k_a, b < k_b.
struct CorrelationTable {
  std::size_t m_a = 0, m_b = 0, k_a = 0, k_b = 0;
  std::vector<double> p;

  CorrelationTable() = default;
  CorrelationTable(std::size_t m_a, std::size_t m_b, std::size_t k_a, std::size_t k_b);

  std::size_t index(std::size_t a, std::size_t b, std::size_t x, std::size_t y) const {
    return ((a * k_b + b) * m_a + x) * m_b + y;
  }
  double& at(std::size_t a, std::size_t b, std::size_t x, std::size_t y) { return p[index(a, b, x, y)]; }
  double at(std::size_t a, std::size_t b, std::size_t x, std::size_t y) const { return p[index(a, b, x, y)]; }

  // Nonnegative and normalised per (x, y) within 1e-10.
  void validate() const;
  bool operator==(const CorrelationTable&) const = default;
};

// k_a^{m_a} k_b^{m_a m_b} + k_a^{m_a m_b} k_b^{m_b} - k_a^{m_a} k_b^{m_b}, as a double to survive overflow.
double causal_vertex_count(std::size_t m_a, std::size_t m_b, std::size_t k_a, std::size_t k_b);

// Deterministic tables of the A-before-B and B-before-A strategies without duplicates.
// Throws SizeLimitExceeded above `limit` vertices.
std::vector<CorrelationTable> enumerate_causal_vertices(std::size_t m_a, std::size_t m_b, std::size_t k_a,
                                                        std::size_t k_b, std::size_t limit = kVertexLimit);

enum class Facet { GYNI, LGYNI };

double facet_value(const CorrelationTable& t, Facet kind);

// Within `tol` (max norm) of the convex hull of the causal vertices.
bool is_causal(const CorrelationTable& t, double tol = kCausalTol);

enum class DemoRoute { PM, PDM };
// Reprepare: second operation measures Z and re-prepares |0>; HalfIdentity: (1/2)|a><a| ⊗ 1.
enum class DemoOps { Reprepare, HalfIdentity };

struct ViolationReport {
  double gyni = 0.0;
  double lgyni = 0.0;
  bool causal = true;
  CorrelationTable table;
};

ViolationReport indefinite_order_demo(DemoRoute route, DemoOps ops = DemoOps::Reprepare);

// 5/16 (1 + 1/sqrt 2)
double expected_gyni_violation();

std::string to_string(DemoRoute r);
std::string to_string(DemoOps o);
DemoRoute parse_route(const std::string& s);
DemoOps parse_ops(const std::string& s);

}  // namespace tempora
