#pragma once

#include "apolar/apolarity.hpp"
#include "apolar/charge.hpp"
#include "apolar/resolution.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apolar {

enum class NodeStatus { black, red };

/// Why a node is red: (1) argument below that of O, (2) chi exceeds the m_r
/// bound for every admissible rank, (3) a forced factorization.
enum class RedReason { none = 0, below_slope = 1, exceeds_m_r = 2, factorization = 3 };

struct NodeVerdict {
  NodeStatus status = NodeStatus::black;
  RedReason reason = RedReason::none;
  std::string detail;
};

/// How to build a socle in a stratum: a weighted power sum of points, or a
/// seeded random form filtered by the entry's invariants.
struct WitnessRecipe {
  std::vector<std::vector<Rational>> points;
  bool random = false;
};

struct CatalogEntry {
  std::string label;
  int n = 0;
  int d = 0;
  HilbertFunction hilbert_function;
  std::optional<std::vector<std::pair<int, int>>> interior_square;
  std::string kernel_object;  ///< empty when the stratum has no kernel
  std::optional<TwistComplex> kernel_class;
  std::string factorization;
  std::optional<int> dimension;
  std::optional<ChargePoint> charge_node;
  NodeVerdict node;
  std::vector<Form> witness_ideal;  ///< generators in x; empty when there is no ideal witness
  WitnessRecipe witness;
};

/// Supported: n = 1 with 1 <= d <= 12, n = 2 with 1 <= d <= 4.
bool catalog_supported(int n, int d);
std::vector<CatalogEntry> catalog(int n, int d);

struct StratumLabel {
  std::optional<CatalogEntry> entry;

  bool classified() const { return entry.has_value(); }
  std::string name() const { return entry ? entry->label : "unclassified"; }
};

StratumLabel classify(const Socle& g);

/// Constructs a socle in the entry's stratum. Random witnesses are drawn from `seed`.
Socle witness_socle(const CatalogEntry& entry, std::uint64_t seed = 20240611);

/// Whether g factors through the entry's witness ideal. Throws DomainError
/// for entries without one.
bool verify_factorization_witness(const Socle& g, const CatalogEntry& entry);

struct BinaryApolarPair {
  int a = 0;
  int b = 0;
  Form fa;
  Form fb;
};

BinaryApolarPair binary_apolar_pair(const Socle& g);

using ProjectivePoint = std::array<Rational, 2>;

struct WaringReport {
  enum class Kind { rational_points, irrational, non_squarefree, non_unique };

  Kind kind = Kind::non_unique;
  int a = 0;
  Form fa;
  std::vector<ProjectivePoint> points;  ///< (1:t) or (0:1)
  Vector weights;
  /// Multiplicities of the roots of F_a over the algebraic closure, decreasing.
  std::vector<int> partition;
  /// Rational roots with their multiplicities.
  std::vector<std::pair<ProjectivePoint, int>> rational_roots;
};

std::string to_string(WaringReport::Kind kind);

WaringReport binary_waring(const Socle& g);

struct QuadricRank {
  int rank = 0;
  StratumLabel label;
};

QuadricRank quadric_rank(const Socle& g);

/// Red/black verdict for a node with the given class on a zdiagram for (n, d).
NodeVerdict judge_node(int n, int d, const TwistComplex& cls);

/// Evaluation point: 0 for even d, -1/2 for odd d.
Rational evaluation_point(int d);

}  // namespace apolar
