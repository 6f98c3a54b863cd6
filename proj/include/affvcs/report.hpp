#ifndef AFFVCS_REPORT_HPP
#define AFFVCS_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "affvcs/coherent.hpp"
#include "affvcs/suite.hpp"
#include "affvcs/verma.hpp"

namespace affvcs {

using json = nlohmann::ordered_json;

struct CharacterReport {
    int lambda = 0;
    Scalar c = 1;
    int degree = 0;
    std::vector<CharacterRow> rows;

    bool operator==(const CharacterReport&) const = default;
};

/// {lambda, c, D, rows: [{weight, depth, dimW, rank}]}; c is written as a
/// rational string.
json to_json(const CharacterReport& r);
/// Inverse of to_json. Throws std::invalid_argument on a malformed document.
CharacterReport character_from_json(const json& j);
std::string to_text(const CharacterReport& r);

json to_json(const RunConfig& cfg, const VerifyReport& r);
std::string to_text(const RunConfig& cfg, const VerifyReport& r);

struct SingularEntry {
    WeightSpaceKey key;
    WVector vector;
    bool maps_to_zero = false;
};

struct SingularReport {
    int lambda = 0;
    Scalar c = 1;
    int degree = 0;
    std::vector<SingularEntry> vectors;

    bool all_in_kernel() const;
};

/// Gram-kernel basis of every weight space of depth <= degree, each checked
/// against the coherent state map.
SingularReport singular_report(const VermaModule& m, int degree, unsigned jobs, std::size_t cap);
json to_json(const SingularReport& r);
std::string to_text(const SingularReport& r);

struct ImageRow {
    WeightSpaceKey key;
    std::size_t dim_w = 0;
    std::size_t rank = 0;
    std::size_t image_rank = 0;
    std::size_t realized_dim = 0;
};

struct ImageReport {
    int lambda = 0;
    Scalar c = 1;
    int degree = 0;
    std::vector<ImageRow> rows;

    bool consistent() const;
};

/// Gram rank next to the dimension of the coherent state image and of the
/// span of the realized PBW words, per weight space.
ImageReport image_report(const Realizer& r, const VermaModule& m, int degree, unsigned jobs, std::size_t cap);
json to_json(const ImageReport& r);
std::string to_text(const ImageReport& r);

json to_json(const VcsVector& v);
json map_json(const VermaModule& m, const WVector& w, const VcsVector& image);
std::string map_text(const WVector& w, const VcsVector& image);

}  // namespace affvcs

#endif
