#pragma once

#include "cusp/criterion.hpp"

#include <functional>
#include <optional>
#include <utility>

namespace cusp {

class ParamsOutOfRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generated instance failed its own validation (coprimality, degree-genus
/// or the per-family self-intersection value). Always a bug, never data.
class ConstructionInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The eight parametric families of realizable two-pair types.
enum class FamilyId { I, II, III, IV, V, VI, VII, VIII };

inline constexpr std::array<FamilyId, 8> kAllFamilies = {
    FamilyId::I,  FamilyId::II, FamilyId::III, FamilyId::IV,
    FamilyId::V,  FamilyId::VI, FamilyId::VII, FamilyId::VIII,
};

std::string_view family_name(FamilyId f);
std::optional<FamilyId> family_from_name(std::string_view name); // case-insensitive roman

/// Parameters. Families I/II take (k, l), III/IV take (n, m), V/VI take n,
/// VII/VIII take k; `a` is the first (or only) parameter, `b` the second.
struct FamilyParams {
    i128 a = 0;
    std::optional<i128> b;
    bool operator==(const FamilyParams&) const = default;
};

std::pair<std::string_view, std::string_view> param_names(FamilyId f); // second empty if unary
std::string format_params(FamilyId f, const FamilyParams& p);          // e.g. "n=3,m=2"

enum class KodairaExpect { MinusInfinity, One, Two };

struct FamilyInstance {
    FamilyId family{};
    FamilyParams params;
    ValidatedType ntype;
    std::array<i128, 4> raw_pairs{}; // (p1,q1,p2,q2) before any degeneration
    i128 degree = 0;
    i128 delta = 0;
    i128 cbar_sq = 0;
    KodairaExpect expected_kappa{};
    bool degenerate = false;
};

/// Builds one instance from the family formulas and validates it fully:
/// the type passes validate_type, degree-genus holds, and the
/// self-intersection matches the family's value (0, -1, m, m, 1-n, -n, -2,
/// -2). Any failure throws; out-of-bound parameters throw ParamsOutOfRange.
FamilyInstance instantiate(FamilyId f, const FamilyParams& p);

/// All instances with degree <= max_degree in ascending parameter order.
/// Degrees are strictly increasing in every parameter; the iteration asserts
/// this while advancing, which also guarantees termination.
void for_each_instance(FamilyId f, i128 max_degree,
                       const std::function<void(const FamilyInstance&)>& fn);
std::vector<FamilyInstance> enumerate_family(FamilyId f, i128 max_degree);

/// Every (family, params) pair whose instance is exactly (t, d). Empty when
/// the type sits in no family. Families are not assumed disjoint; all
/// matches are returned.
std::vector<std::pair<FamilyId, FamilyParams>> identify(const ValidatedType& t, i128 d);

/// The two types that satisfy the counting criterion but are excluded by
/// spectrum semicontinuity.
struct ExceptionalType {
    NewtonPairType ntype;
    i128 degree = 0;
    std::string exclusion_note;
};

const std::vector<ExceptionalType>& known_exceptions();

} // namespace cusp
