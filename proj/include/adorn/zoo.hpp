#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adorn/cosets.hpp"
#include "adorn/presentation.hpp"

namespace adorn {

struct ZooFamily {
  std::string name;
  std::string params;  // e.g. "p,q"; empty when the family takes none
  std::string description;
};

const std::vector<ZooFamily>& zoo_families();

// Standard presentation of a named family. Throws InvalidArgument on an
// unknown family or bad parameters.
//   fuchsian: params = genus, then the cone indices
GroupPresentation make(const std::string& family, const std::vector<long>& params = {});

// "2,3,7" -> {2, 3, 7}; empty string -> {}.
std::vector<long> parse_params(const std::string& csv);

// Disjoint union of generators and relators. Clashing names in b get a
// numeric suffix.
GroupPresentation free_product(const GroupPresentation& a, const GroupPresentation& b);
// free_product plus [x, y] for every x of a and y of b.
GroupPresentation direct_product(const GroupPresentation& a, const GroupPresentation& b);

// How non-triviality of a group was established.
struct NontrivialityCertificate {
  std::string method;  // "abelianization", "enumeration", "permutation"
  std::string detail;
};

// Tries, in order, a non-trivial abelianization, a completed enumeration
// with more than one coset, and a bounded search for a non-trivial
// homomorphism into S_k for k <= max_degree.
std::optional<NontrivialityCertificate> certify_nontrivial(const GroupPresentation& p,
                                                           const EnumerationCaps& caps = {},
                                                           std::size_t max_degree = 7);

// Non-trivial permutation images (each of size k) of the generators that
// satisfy every relator, or nullopt if none exists or the budget runs out.
std::optional<std::vector<std::vector<std::size_t>>> find_permutation_representation(
    const GroupPresentation& p, std::size_t k, std::size_t budget = 2000000);

enum class FreeProductKind { PerfectProduct, Dinfty, NonAdorable };

std::string to_string(FreeProductKind k);

struct FreeProductVerdict {
  FreeProductKind kind = FreeProductKind::NonAdorable;
  std::optional<std::size_t> doa;
  std::string note;
  std::array<NontrivialityCertificate, 2> certificates;
};

// Trichotomy for A * B with A, B non-trivial. Throws
// CannotCertifyFactorTriviality when a factor cannot be shown non-trivial.
FreeProductVerdict free_product_verdict(const GroupPresentation& a, const GroupPresentation& b,
                                        const EnumerationCaps& caps = {});

enum class SplittingKind { Amalgam, HNN };

struct SplittingDecl {
  SplittingKind kind = SplittingKind::Amalgam;
  // n such that the edge group H satisfies G^n meet H = 1 and
  // G^(n-1) meet H != 1; asserted by the caller.
  std::optional<std::size_t> solvability_step;
};

enum class SplittingBranch { AdorableNotSolvable, DerivedStageIsDinfty, NonAdorable };

std::string to_string(SplittingBranch b);

struct SplittingOutcome {
  SplittingBranch branch;
  std::optional<std::size_t> degree;  // doa for AdorableNotSolvable, n for the D-infinity stage
  std::string note;
};

// Possible outcomes for a group that splits over an n-step solvable
// subgroup. Throws UnknownSolvabilityStep when the step is not given.
std::vector<SplittingOutcome> splitting_verdict(const SplittingDecl& decl);

}  // namespace adorn
