#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "affvcs/report.hpp"

namespace affvcs::cli {

namespace {

struct Options {
    int lambda = 0;
    std::string c = "1";
    int degree = 3;
    std::string d0 = "0";
    std::string format = "text";
    std::string out;
    unsigned jobs = 1;
    std::size_t cap = 2000;
    std::string transcription = "corrected";
    std::string generator;
    std::string word;
    int j = 0;
};

RunConfig make_config(const Options& o) {
    RunConfig cfg;
    cfg.lambda = o.lambda;
    cfg.c = parse_scalar(o.c);
    cfg.degree = o.degree;
    cfg.d0 = parse_scalar(o.d0);
    cfg.jobs = std::max(1u, o.jobs);
    cfg.cap = o.cap;
    cfg.transcription = o.transcription == "printed" ? Transcription::Printed : Transcription::Corrected;
    cfg.validate();
    return cfg;
}

/// "a + b - c" from rendered terms, folding a leading minus into the joint.
std::string join_terms(const std::vector<OperatorTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        std::string s = to_string(t);
        const bool negative = s.front() == '-';
        if (out.empty())
            out = s;
        else
            out += negative ? " - " + s.substr(1) : " + " + s;
    }
    return out;
}

const char* endo_name(Endo e) {
    switch (e) {
        case Endo::E: return "e";
        case Endo::H: return "h";
        case Endo::F: return "f";
        case Endo::I: break;
    }
    return "1";
}

struct Emitted {
    std::string text;
    int status = kPass;
};

Emitted cmd_verify(const Options& o) {
    const RunConfig cfg = make_config(o);
    const VerifyReport r = run_verify(cfg);
    return {o.format == "json" ? to_json(cfg, r).dump(2) + "\n" : to_text(cfg, r), r.passed() ? kPass : kMathFailure};
}

Emitted cmd_character(const Options& o) {
    const RunConfig cfg = make_config(o);
    VermaModule m(cfg.lambda, cfg.c);
    CharacterReport r{cfg.lambda, cfg.c, cfg.degree, m.character_table(cfg.degree, cfg.jobs, cfg.cap)};
    return {o.format == "json" ? to_json(r).dump(2) + "\n" : to_text(r), kPass};
}

Emitted cmd_singular(const Options& o) {
    const RunConfig cfg = make_config(o);
    VermaModule m(cfg.lambda, cfg.c);
    const SingularReport r = singular_report(m, cfg.degree, cfg.jobs, cfg.cap);
    return {o.format == "json" ? to_json(r).dump(2) + "\n" : to_text(r), r.all_in_kernel() ? kPass : kMathFailure};
}

Emitted cmd_realize(const Options& o) {
    const RunConfig cfg = make_config(o);
    const Generator g = parse_generator(o.generator);
    RealizerOptions ropts;
    ropts.transcription = cfg.transcription;
    Realizer r(cfg.lambda, cfg.c, cfg.d0, ropts);
    const auto terms = r.realize(g).terms(cfg.degree);
    const std::string rendered = join_terms(terms);
    if (o.format != "json") return {"xi(" + to_string(g) + ") = " + rendered + "\n", kPass};

    json j;
    j["generator"] = to_string(g);
    j["lambda"] = cfg.lambda;
    j["c"] = to_string(cfg.c);
    j["d0"] = to_string(cfg.d0);
    j["D"] = cfg.degree;
    j["terms"] = json::array();
    for (const auto& t : terms)
        j["terms"].push_back({{"coeff", to_string(t.coeff)},
                              {"endo", endo_name(t.endo)},
                              {"derivative", t.derivative ? json(to_string(*t.derivative)) : json(nullptr)}});
    j["text"] = rendered;
    return {j.dump(2) + "\n", kPass};
}

Emitted cmd_map(const Options& o) {
    const RunConfig cfg = make_config(o);
    VermaModule m(cfg.lambda, cfg.c);
    if (o.word.empty()) {
        RealizerOptions ropts;
        ropts.transcription = cfg.transcription;
        Realizer r(cfg.lambda, cfg.c, cfg.d0, ropts);
        const ImageReport rep = image_report(r, m, cfg.degree, cfg.jobs, cfg.cap);
        return {o.format == "json" ? to_json(rep).dump(2) + "\n" : to_text(rep), rep.consistent() ? kPass : kMathFailure};
    }
    if (o.j < 0 || o.j > cfg.lambda) throw std::invalid_argument("--j must lie in [0, lambda]");
    const WVector w(BasisKey{parse_word(o.word), o.j});
    const VcsVector image = coherent_state_map(m, w);
    return {o.format == "json" ? map_json(m, w, image).dump(2) + "\n" : map_text(w, image), kPass};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact vector coherent state realization of affine sl(2) highest weight modules", "affvcs"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--lambda", o.lambda, "highest weight of the sl(2) module V0")->check(CLI::NonNegativeNumber);
    app.add_option("--c", o.c, "central charge, an exact rational p or p/q");
    app.add_option("--degree,-D", o.degree, "truncation degree")->check(CLI::NonNegativeNumber);
    app.add_option("--d0", o.d0, "eigenvalue of d on the highest weight vector");
    app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", o.out, "write the report to this file");
    app.add_option("--jobs", o.jobs, "worker threads for weight-space work")->check(CLI::PositiveNumber);
    app.add_option("--cap", o.cap, "largest weight-space dimension allowed")->check(CLI::PositiveNumber);
    app.add_option("--transcription", o.transcription, "form of xi(h[-k]) to build")
        ->check(CLI::IsMember({"corrected", "printed"}));

    auto* verify = app.add_subcommand("verify", "run every invariant suite");
    auto* character = app.add_subcommand("character", "weight space dimensions and Gram ranks");
    auto* singular = app.add_subcommand("singular", "Gram kernel vectors and their coherent state images");
    auto* realize = app.add_subcommand("realize", "print the differential operator of a generator");
    realize->add_option("generator", o.generator, "e.g. e[-1], h[0], f[2], kappa, d")->required();
    auto* map = app.add_subcommand("map", "coherent state map of a PBW vector, or image ranks per weight space");
    map->add_option("--word", o.word, "PBW word such as \"e[-1] f[-2]\"");
    map->add_option("--j", o.j, "index of the basis vector w_j of V0");

    std::ostringstream cli_out, cli_err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, cli_out, cli_err);
        out << cli_out.str();
        err << cli_err.str();
        return code == 0 ? kPass : kUsageError;
    }

    Emitted result;
    try {
        if (app.got_subcommand(verify))
            result = cmd_verify(o);
        else if (app.got_subcommand(character))
            result = cmd_character(o);
        else if (app.got_subcommand(singular))
            result = cmd_singular(o);
        else if (app.got_subcommand(realize))
            result = cmd_realize(o);
        else
            result = cmd_map(o);
        (void)map;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << " (raise --cap or lower --degree)\n";
        return kUsageError;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    if (o.out.empty()) {
        out << result.text;
    } else {
        std::ofstream file(o.out);
        if (!(file << result.text)) {
            err << "error: cannot write " << o.out << "\n";
            return kUsageError;
        }
    }
    return result.status;
}

}  // namespace affvcs::cli
