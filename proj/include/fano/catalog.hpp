#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/cubicio.hpp"
#include "fano/discovery.hpp"

namespace fano {

/// One family of cubics realizing a classification row, with a pinned sample
/// whose full pipeline output is frozen as expected data.
struct FamilySpec {
    std::string id;      // classification row label, e.g. "G(3,3,5)"
    std::string slug;    // file-system friendly name, e.g. "fermat"
    std::string formula; // human-readable template

    // Scalar parameters (empty for rigid samples) with pinned values.
    std::vector<std::string> parameter_names;
    std::map<std::string, FieldElement> pinned_parameters;
    bool lambda_cubed_ne_1 = false;  // admissibility: lambda^3 != 1

    int expected_n = 0;
    std::int64_t expected_order = 1;
    std::vector<ProjectivePoint> expected_vertices;  // for the pinned sample

    /// Prime used to falsify smoothness of the pinned sample.  7 unless the
    /// sample has bad reduction at 7 (the falsifier would then report a
    /// spurious witness even though the cubic is smooth over Q(w)).
    std::uint32_t validation_prime = 7;

    /// Exact plane model expected for a labeled curve of the pinned sample,
    /// where the construction pins one; nullopt when no template is recorded.
    std::function<std::optional<Poly>(const std::string& label)> expected_model;
};

const std::vector<FamilySpec>& catalog();

/// Lookup by row label or slug; throws DomainError for unknown ids.
const FamilySpec& catalog_entry(const std::string& id_or_slug);

/// Builds the family cubic.  Missing parameters default to the pinned
/// values; unknown names or inadmissible values raise DomainError.
Cubic instantiate(const std::string& id_or_slug,
                  const std::map<std::string, FieldElement>& params = {});

Cubic instantiate_pinned(const std::string& id_or_slug);

/// Expected intersection number between two labeled curves of a catalog
/// instance: 1 iff the label index sets are disjoint.
int expected_intersection(const std::string& label_a, const std::string& label_b);

/// Digest of every pinned sample, for the report's `complete` flag.
const std::vector<std::string>& pinned_digests();
bool is_pinned_digest(const std::string& digest);

}  // namespace fano
