#pragma once

#include "pentaflag/flag_algebra.hpp"
#include "pentaflag/graph.hpp"
#include "pentaflag/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pentaflag {

using RationalMatrix = std::vector<std::vector<Rational>>;

class CertificateError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformedDocument,
    kUnsupportedTheory,
    kMalformedRational,
    kMalformedGraph,
    kNotTriangleFree,
    kNotIndependent,
    kLabelsMismatch,
    kNotSquare,
    kNotSymmetric,
    kDimensionMismatch,
    kBlockTooLarge,
    kLevelOutOfRange,
  };

  CertificateError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct LinearTerm {
  std::string name;
  SmallGraph graph;  // canonical
  Rational coefficient;
  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

/// Contributes the unlabeled average of v^T M v, nonnegative whenever M is PSD.
struct SosBlock {
  std::string name;
  TypeSigma type;
  std::vector<AlgebraElement> vector;
  RationalMatrix matrix;
  friend bool operator==(const SosBlock&, const SosBlock&) = default;
};

/// Claims target_coefficient * target + linear terms + SOS blocks <= bound,
/// coefficient-wise in the basis of triangle-free graphs on `level` vertices.
struct Certificate {
  std::string theory = "triangle-free";
  int level = 5;
  Rational bound;
  SmallGraph target;  // canonical
  Rational target_coefficient;
  std::vector<LinearTerm> linear_terms;
  std::vector<SosBlock> sos_blocks;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline constexpr int kMaxCertificateLevel = 7;

/// Exact PSD test by fraction-free symmetric elimination. Throws CertificateError
/// (kNotSquare / kNotSymmetric) on malformed input.
bool check_psd(const RationalMatrix& m);

/// Cross-check: every principal minor is nonnegative. Exponential; n <= 12.
bool psd_by_principal_minors(const RationalMatrix& m);

void require_symmetric(const RationalMatrix& m);

/// Unlabeled average of v^T M v for one block, not yet lifted.
AlgebraElement block_square(const SosBlock& block);

/// Size of the largest flag the block produces before averaging.
int block_degree(const SosBlock& block);

struct ModelCoefficient {
  SmallGraph model;
  Rational coefficient;
};

/// Coefficients of the left-hand side over the census of order cert.level.
std::vector<ModelCoefficient> expand_lhs(const Certificate& cert, unsigned workers = 0);

/// Only the SOS part of the left-hand side, over the census of order cert.level.
std::vector<ModelCoefficient> expand_sos(const Certificate& cert, unsigned workers = 0);

struct BlockCheck {
  std::string name;
  std::size_t dimension = 0;
  bool symmetric = false;
  bool psd = false;
};

struct VerificationReport {
  int level = 0;
  Rational bound;
  Rational target_coefficient;
  std::vector<ModelCoefficient> coefficients;
  std::vector<Rational> slack;  // bound - coefficient, aligned with `coefficients`
  Rational max_coefficient;
  std::vector<BlockCheck> blocks;
  bool all_psd = false;
  bool coefficients_within_bound = false;
  bool pass = false;
  Rational derived_bound;  // bound / target coefficient
  std::optional<std::string> failure;
};

/// Never throws for semantic failures; they are recorded in the report.
VerificationReport verify(const Certificate& cert, unsigned workers = 0);

/// The flag-algebra certificate for C5 <= 5!/5^5 in triangle-free graphs.
Certificate bundled_pentagon_certificate();

/// P5, the linear term named "M4" in the bundled certificate.
SmallGraph graph_M4();
/// P4 + K1, the linear term named "C5-" in the bundled certificate.
SmallGraph graph_C5_minus();

struct FigureAssignment {
  SmallGraph m4;
  SmallGraph c5_minus;
  friend bool operator==(const FigureAssignment&, const FigureAssignment&) = default;
};

/// Pins the two linear-term graphs of the bundled certificate: lists every
/// assignment of distinct 5-vertex models that makes the certificate verify, and
/// the assignment forced by the structural constraints (C5- an induced subgraph
/// of C5 + K1, M4 one of C5 plus a pendant edge, both with zero density in the
/// pentagon blow-up limit).
struct FigureIdentification {
  std::vector<FigureAssignment> passing;
  std::vector<SmallGraph> c5_minus_candidates;
  std::vector<SmallGraph> m4_candidates;
  std::optional<FigureAssignment> selected;
};
FigureIdentification identify_figure_graphs(unsigned workers = 0);

std::string save_certificate(const Certificate& cert);
Certificate load_certificate(std::string_view json_text);

}  // namespace pentaflag
