#include "affvcs/report.hpp"

#include "parallel.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace affvcs {

namespace {

void check_cap(const VermaModule& m, const WeightSpaceKey& key, std::size_t cap) {
    if (m.weight_basis(key).size() > cap)
        throw std::length_error("weight space (" + std::to_string(key.weight) + ", " + std::to_string(key.depth) +
                                ") exceeds the cap of " + std::to_string(cap));
}

std::vector<WeightSpaceKey> keys_up_to(const VermaModule& m, int degree, std::size_t cap) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    std::vector<WeightSpaceKey> keys;
    for (int d = 0; d <= degree; ++d)
        for (const auto& k : m.keys_at_depth(d)) {
            check_cap(m, k, cap);
            keys.push_back(k);
        }
    return keys;
}

json header(int lambda, const Scalar& c, int degree) {
    json j;
    j["lambda"] = lambda;
    j["c"] = to_string(c);
    j["D"] = degree;
    return j;
}

std::string header_text(int lambda, const Scalar& c, int degree) {
    return "lambda = " + std::to_string(lambda) + ", c = " + to_string(c) + ", D = " + std::to_string(degree) + "\n";
}

template <class T>
T required(const json& j, const char* field) {
    if (!j.contains(field)) throw std::invalid_argument(std::string("missing field '") + field + "'");
    try {
        return j.at(field).get<T>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad field '") + field + "': " + e.what());
    }
}

}  // namespace

json to_json(const CharacterReport& r) {
    json j = header(r.lambda, r.c, r.degree);
    j["rows"] = json::array();
    for (const auto& row : r.rows)
        j["rows"].push_back({{"weight", row.key.weight}, {"depth", row.key.depth}, {"dimW", row.dim_w}, {"rank", row.rank}});
    return j;
}

CharacterReport character_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("character report must be a JSON object");
    CharacterReport r;
    r.lambda = required<int>(j, "lambda");
    r.c = parse_scalar(required<std::string>(j, "c"));
    r.degree = required<int>(j, "D");
    if (!j.contains("rows") || !j["rows"].is_array()) throw std::invalid_argument("missing array 'rows'");
    for (const auto& row : j["rows"]) {
        CharacterRow out;
        out.key.weight = required<int>(row, "weight");
        out.key.depth = required<int>(row, "depth");
        out.dim_w = required<std::size_t>(row, "dimW");
        out.rank = required<std::size_t>(row, "rank");
        r.rows.push_back(out);
    }
    return r;
}

std::string to_text(const CharacterReport& r) {
    std::ostringstream os;
    os << header_text(r.lambda, r.c, r.degree);
    os << std::setw(8) << "weight" << std::setw(7) << "depth" << std::setw(7) << "dimW" << std::setw(7) << "rank"
       << "\n";
    for (const auto& row : r.rows)
        os << std::setw(8) << row.key.weight << std::setw(7) << row.key.depth << std::setw(7) << row.dim_w
           << std::setw(7) << row.rank << "\n";
    return os.str();
}

json to_json(const RunConfig& cfg, const VerifyReport& r) {
    json j = header(cfg.lambda, cfg.c, cfg.degree);
    j["d0"] = to_string(cfg.d0);
    j["transcription"] = cfg.transcription == Transcription::Corrected ? "corrected" : "printed";
    j["status"] = r.passed() ? "PASS" : "FAIL";
    j["suites"] = json::array();
    for (const auto& s : r.suites) j["suites"].push_back({{"name", s.name}, {"checked", s.checked}, {"failed", s.failed}});
    j["failures"] = json::array();
    for (const auto& f : r.failures) j["failures"].push_back({{"suite", f.suite}, {"detail", f.detail}});
    return j;
}

std::string to_text(const RunConfig& cfg, const VerifyReport& r) {
    std::ostringstream os;
    os << header_text(cfg.lambda, cfg.c, cfg.degree);
    for (const auto& s : r.suites)
        os << "  " << std::left << std::setw(22) << s.name << std::right << std::setw(8) << s.checked << " checked"
           << std::setw(6) << s.failed << " failed\n";
    for (const auto& f : r.failures) os << "FAIL " << f.suite << ": " << f.detail << "\n";
    os << (r.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

bool SingularReport::all_in_kernel() const {
    for (const auto& v : vectors)
        if (!v.maps_to_zero) return false;
    return true;
}

SingularReport singular_report(const VermaModule& m, int degree, unsigned jobs, std::size_t cap) {
    const auto keys = keys_up_to(m, degree, cap);
    std::vector<std::vector<SingularEntry>> found(keys.size());
    detail::parallel_for(keys.size(), jobs, [&](std::size_t i) {
        for (auto& v : m.singular_vectors(keys[i])) {
            const bool zero = kernel_check(m, v);
            found[i].push_back({keys[i], std::move(v), zero});
        }
    });
    SingularReport r{m.lambda(), m.c(), degree, {}};
    for (auto& block : found)
        for (auto& e : block) r.vectors.push_back(std::move(e));
    return r;
}

json to_json(const SingularReport& r) {
    json j = header(r.lambda, r.c, r.degree);
    j["vectors"] = json::array();
    for (const auto& e : r.vectors)
        j["vectors"].push_back({{"weight", e.key.weight},
                                {"depth", e.key.depth},
                                {"vector", to_string(e.vector)},
                                {"maps_to_zero", e.maps_to_zero}});
    return j;
}

std::string to_text(const SingularReport& r) {
    std::ostringstream os;
    os << header_text(r.lambda, r.c, r.degree);
    if (r.vectors.empty()) os << "no singular vectors\n";
    for (const auto& e : r.vectors)
        os << "(" << e.key.weight << ", " << e.key.depth << ")  " << to_string(e.vector) << "  xi_w "
           << (e.maps_to_zero ? "= 0" : "!= 0") << "\n";
    return os.str();
}

bool ImageReport::consistent() const {
    for (const auto& row : rows)
        if (row.rank != row.image_rank || row.rank != row.realized_dim) return false;
    return true;
}

ImageReport image_report(const Realizer& r, const VermaModule& m, int degree, unsigned jobs, std::size_t cap) {
    const auto keys = keys_up_to(m, degree, cap);
    ImageReport out{m.lambda(), m.c(), degree, std::vector<ImageRow>(keys.size())};
    detail::parallel_for(keys.size(), jobs, [&](std::size_t i) {
        auto& row = out.rows[i];
        row.key = keys[i];
        row.dim_w = m.weight_basis(keys[i]).size();
        row.rank = m.gram_rank(keys[i]);
        row.image_rank = coherent_image_rank(m, keys[i]);
        row.realized_dim = image_basis(r, m, keys[i]).size();
    });
    return out;
}

json to_json(const ImageReport& r) {
    json j = header(r.lambda, r.c, r.degree);
    j["rows"] = json::array();
    for (const auto& row : r.rows)
        j["rows"].push_back({{"weight", row.key.weight},
                             {"depth", row.key.depth},
                             {"dimW", row.dim_w},
                             {"rank", row.rank},
                             {"imageRank", row.image_rank},
                             {"realizedDim", row.realized_dim}});
    return j;
}

std::string to_text(const ImageReport& r) {
    std::ostringstream os;
    os << header_text(r.lambda, r.c, r.degree);
    os << std::setw(8) << "weight" << std::setw(7) << "depth" << std::setw(7) << "dimW" << std::setw(7) << "rank"
       << std::setw(11) << "imageRank" << std::setw(13) << "realizedDim\n";
    for (const auto& row : r.rows)
        os << std::setw(8) << row.key.weight << std::setw(7) << row.key.depth << std::setw(7) << row.dim_w
           << std::setw(7) << row.rank << std::setw(11) << row.image_rank << std::setw(12) << row.realized_dim << "\n";
    return os.str();
}

json to_json(const VcsVector& v) {
    json out = json::array();
    for (int j = 0; j < v.dim(); ++j) out.push_back(to_string(v[j]));
    return out;
}

json map_json(const VermaModule& m, const WVector& w, const VcsVector& image) {
    json j;
    j["lambda"] = m.lambda();
    j["c"] = to_string(m.c());
    j["w"] = to_string(w);
    j["components"] = to_json(image);
    j["maps_to_zero"] = image.is_zero();
    return j;
}

std::string map_text(const WVector& w, const VcsVector& image) {
    std::ostringstream os;
    os << "xi(" << to_string(w) << ") =\n";
    bool any = false;
    for (int j = 0; j < image.dim(); ++j) {
        if (image[j].is_zero()) continue;
        os << "  (" << to_string(image[j]) << ") w_" << j << "\n";
        any = true;
    }
    if (!any) os << "  0\n";
    return os.str();
}

}  // namespace affvcs
