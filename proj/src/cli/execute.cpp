#include <chrono>
#include <charconv>

#include "frobtor/asymptotics.hpp"
#include "frobtor/cli.hpp"
#include "frobtor/errors.hpp"
#include "frobtor/homology.hpp"
#include "frobtor/oracle.hpp"
#include "frobtor/resolution.hpp"

#ifndef FROBTOR_VERSION
#define FROBTOR_VERSION "0.0.0"
#endif

namespace frobtor::cli {

using nlohmann::json;

std::string_view tool_version() noexcept { return FROBTOR_VERSION; }

bool is_input_error(const std::exception& err) noexcept {
    return dynamic_cast<const ParseError*>(&err) || dynamic_cast<const PreconditionError*>(&err) ||
           dynamic_cast<const GradingError*>(&err) || dynamic_cast<const DegenerateRing*>(&err) ||
           dynamic_cast<const InvalidMultiplier*>(&err) || dynamic_cast<const DescriptorMismatch*>(&err);
}

namespace {

std::string shortest(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

json rational_json(const Rational& r) { return frobtor::to_string(r); }

json sequence_json(const LengthSequence& seq) {
    json table = json::array();
    for (const auto& entry : seq.entries) {
        const auto n = seq.normalized(entry);
        table.push_back({{"e", entry.e},
                         {"q", entry.q},
                         {"i", seq.spot},
                         {"lambda", entry.lambda},
                         {"normalized", rational_json(n)},
                         {"normalized_value", to_double(n)}});
    }
    json out{{"spot", seq.spot}, {"d", seq.d}, {"table", table}};
    if (seq.error) out["error"] = *seq.error;
    return out;
}

json estimate_json(const LimitEstimate& est) {
    return {{"c", rational_json(est.c)},
            {"c_value", to_double(est.c)},
            {"b", rational_json(est.b)},
            {"b_value", to_double(est.b)},
            {"relative_residual", rational_json(est.relative_residual)},
            {"relative_residual_value", to_double(est.relative_residual)},
            {"method", est.method},
            {"e_range", {est.e_first, est.e_last}},
            {"low_confidence", est.low_confidence},
            {"clamped", est.clamped}};
}

json optional_estimate(const std::optional<LimitEstimate>& est) { return est ? estimate_json(*est) : json(nullptr); }

void add_rows(std::vector<CsvRow>& rows, const LengthSequence& seq) {
    for (const auto& entry : seq.entries)
        rows.push_back({entry.e, entry.q, seq.spot, entry.lambda, to_double(seq.normalized(entry))});
}

json matrix_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(m.at(r, c).to_string());
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const RingPtr& S, const json& j) {
    Matrix m(S, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& entries = j.at("entries");
    if (entries.size() != m.rows() * m.cols()) throw std::runtime_error("malformed cached matrix");
    for (std::size_t k = 0; k < entries.size(); ++k)
        m.at(k / m.cols(), k % m.cols()) = parse_polynomial(S, entries[k].get<std::string>());
    return m;
}

class Session {
public:
    Session(const JobSpec& job, const ExecOptions& options) : job_(job), options_(options) {
        if (options.cache_dir) cache_.emplace(*options.cache_dir);
    }

    bool cache_hit() const noexcept { return hit_; }

    QuotientRingPtr ring() {
        if (ring_) return ring_;
        const auto& S = job_.descriptor;
        const auto text = presentation_text(*S, job_.ideal, job_.equidimensional);
        if (cache_) {
            if (auto payload = load("gb", "")) {
                try {
                    GroebnerBasis gb{S, 1, {0}, {}, true};
                    for (const auto& g : payload->at("generators"))
                        gb.generators.push_back(VectorElement::single(1, 0, parse_polynomial(S, g.get<std::string>())));
                    std::vector<Polynomial> gens;
                    for (const auto& f : job_.ideal)
                        if (!f.is_zero()) gens.push_back(f);
                    for (const auto& f : gens)
                        if (!f.weighted_degree()) throw GradingError("ideal generator '" + f.to_string() + "' is not homogeneous");
                    ring_ = QuotientRing::from_basis(S, std::move(gens), std::move(gb), job_.equidimensional);
                    hit_ = true;
                    return ring_;
                } catch (const ParseError&) {
                } catch (const json::exception&) {
                }
            }
        }
        ring_ = QuotientRing::make(S, job_.ideal, job_.equidimensional);
        if (cache_) {
            json gens = json::array();
            for (const auto& g : ring_->gb().generators) gens.push_back(g.component(0).to_string());
            store("gb", "", {{"generators", gens}});
        }
        return ring_;
    }

    FreeComplex resolution(std::size_t L) {
        auto R = ring();
        const auto params = "k;length=" + std::to_string(L);
        if (cache_) {
            if (auto payload = load("resolution", params)) {
                try {
                    std::vector<std::vector<std::int64_t>> shifts = payload->at("shifts");
                    std::vector<Matrix> d;
                    for (const auto& m : payload->at("differentials")) d.push_back(matrix_from_json(R->descriptor(), m));
                    auto G = FreeComplex::from_differentials(R, std::move(d), {}, std::move(shifts));
                    hit_ = true;
                    return G;
                } catch (const std::exception&) {
                }
            }
        }
        auto G = minimal_free_resolution(ResolutionRequest::residue_field(R, L));
        if (cache_) {
            json shifts = json::array(), d = json::array();
            for (std::size_t i = 0; i <= G.length(); ++i) shifts.push_back(G.shifts(i));
            for (std::size_t i = 1; i <= G.length(); ++i) d.push_back(matrix_json(G.d(i)));
            store("resolution", params, {{"shifts", shifts}, {"differentials", d}});
        }
        return G;
    }

private:
    std::optional<json> load(std::string_view op, std::string_view params) {
        return cache_->load(presentation_text(*job_.descriptor, job_.ideal, job_.equidimensional), op, params);
    }
    void store(std::string_view op, std::string_view params, const json& payload) {
        cache_->store(presentation_text(*job_.descriptor, job_.ideal, job_.equidimensional), op, params, payload);
    }

    const JobSpec& job_;
    const ExecOptions& options_;
    std::optional<Cache> cache_;
    QuotientRingPtr ring_;
    bool hit_ = false;
};

void run_command(const JobSpec& job, const ExecOptions& opt, Session& session, Report& report) {
    json& out = report.result;
    const unsigned threads = std::max(1u, opt.threads);
    auto R = session.ring();
    out["ring"] = {{"presentation", R->canonical()}, {"dim", R->dim()}, {"embdim", R->embdim()}};
    const std::size_t L = job.effective_length();

    switch (job.command) {
        case Command::resolve: {
            auto G = session.resolution(L);
            json ranks = json::array(), shifts = json::array(), d = json::array();
            for (std::size_t i = 0; i <= G.length(); ++i) {
                ranks.push_back(G.rank(i));
                shifts.push_back(G.shifts(i));
            }
            for (std::size_t i = 1; i <= G.length(); ++i) d.push_back(matrix_json(G.d(i)));
            out["ranks"] = ranks;
            out["shifts"] = shifts;
            out["differentials"] = d;
            auto cert = resolution_certificate(G);
            out["certificate"] = {{"is_complex", cert.is_complex},
                                  {"is_minimal", cert.is_minimal},
                                  {"exact", cert.exact},
                                  {"inexact_spots", cert.inexact_spots},
                                  {"failures", cert.failures}};
            if (!cert.ok()) report.exit_code = kComputationError;
            break;
        }
        case Command::hk: {
            auto hk = hilbert_kunz(R, job.emax, threads);
            out["sequence"] = sequence_json(hk.sequence);
            out["estimate"] = estimate_json(hk.estimate);
            add_rows(report.csv, hk.sequence);
            if (hk.sequence.error) report.exit_code = kComputationError;
            break;
        }
        case Command::tor: {
            out["spots"] = json::array();
            if (job.spots.empty()) break;
            auto G = session.resolution(L);
            for (auto i : job.spots) {
                auto seq = tor_length_sequence(G, i, job.emax, 1, threads);
                json entry{{"sequence", sequence_json(seq)}};
                try {
                    entry["estimate"] = estimate_json(limit_estimate(seq));
                } catch (const InsufficientData& err) {
                    entry["estimate"] = nullptr;
                    entry["estimate_error"] = err.what();
                }
                out["spots"].push_back(entry);
                add_rows(report.csv, seq);
                if (seq.error) report.exit_code = kComputationError;
            }
            break;
        }
        case Command::verdict: {
            if (job.spots.empty()) throw PreconditionError("a verdict needs at least one spot");
            auto G = session.resolution(L);
            auto v = regularity_verdict(G, job.spots, job.emax, job.tol, threads);
            json spots = json::array();
            for (const auto& s : v.spots) {
                spots.push_back({{"sequence", sequence_json(s.sequence)},
                                 {"estimate", optional_estimate(s.estimate)},
                                 {"identically_zero", s.identically_zero},
                                 {"diagnostic", s.diagnostic}});
                add_rows(report.csv, s.sequence);
            }
            out["verdict"] = {{"kind", frobtor::to_string(v.kind)},
                              {"oracle_regular", v.oracle_regular},
                              {"inconsistency", v.inconsistency},
                              {"witness_spot", v.witness_spot ? json(*v.witness_spot) : json(nullptr)},
                              {"tol", shortest(v.tol)},
                              {"e_range", {1, v.e_max}},
                              {"length", v.length},
                              {"diagnostics", v.diagnostics},
                              {"spots", spots}};
            if (v.inconsistency) {
                out["error"] = {{"kind", "inconsistency"}, {"message", v.diagnostics}};
                report.exit_code = kComputationError;
            }
            break;
        }
        case Command::phantom: {
            if (!job.c) throw PreconditionError("the phantom command needs a multiplier c");
            auto G = session.resolution(L);
            out["spots"] = json::array();
            for (auto i : job.spots) {
                auto rep = empirical_stably_phantom(G, i, *job.c, job.emax, threads);
                json per_e = json::array();
                for (std::size_t e = 0; e < rep.annihilates.size(); ++e)
                    per_e.push_back({{"e", e},
                                     {"q", frobenius_q(R->descriptor()->characteristic(), static_cast<unsigned>(e))},
                                     {"annihilates", static_cast<bool>(rep.annihilates[e])}});
                out["spots"].push_back({{"spot", i},
                                        {"multiplier", rep.multiplier},
                                        {"per_e", per_e},
                                        {"stably_phantom_up_to_emax", rep.stably_phantom_up_to_emax},
                                        {"note", rep.note}});
            }
            break;
        }
        case Command::tcevidence: {
            if (job.N.empty() || job.W.empty()) throw PreconditionError("tcevidence needs both N and W");
            auto tc = tight_closure_evidence(R, job.N, job.W, job.emax, job.tol, threads);
            out["sequence"] = sequence_json(tc.sequence);
            out["estimate"] = optional_estimate(tc.estimate);
            out["evidence_w_in_tight_closure"] = tc.evidence_w_in_tight_closure;
            out["tol"] = shortest(tc.tol);
            add_rows(report.csv, tc.sequence);
            if (tc.sequence.error) report.exit_code = kComputationError;
            break;
        }
        case Command::compare_req: {
            if (job.req.empty()) throw PreconditionError("compare-req needs the R^eq ideal (req)");
            out["spots"] = json::array();
            for (auto i : job.spots) {
                auto cmp = compare_req(R, job.req, i, job.emax, L, job.tol, threads);
                json gaps = json::array();
                for (std::size_t k = 0; k < cmp.gaps.size(); ++k)
                    gaps.push_back({{"e", cmp.over_r.entries[k].e},
                                    {"q", cmp.over_r.entries[k].q},
                                    {"gap", rational_json(cmp.gaps[k])},
                                    {"gap_value", to_double(cmp.gaps[k])}});
                out["spots"].push_back({{"spot", i},
                                        {"req", cmp.req},
                                        {"over_r", sequence_json(cmp.over_r)},
                                        {"over_req", sequence_json(cmp.over_req)},
                                        {"gaps", gaps},
                                        {"estimate_r", optional_estimate(cmp.estimate_r)},
                                        {"estimate_req", optional_estimate(cmp.estimate_req)},
                                        {"consistent", cmp.consistent},
                                        {"tol", shortest(cmp.tol)}});
                add_rows(report.csv, cmp.over_r);
            }
            break;
        }
        case Command::crosscheck: {
            auto G = session.resolution(L);
            json instances = json::array();
            std::size_t mismatches = 0;
            for (unsigned e = 0; e <= job.emax; ++e) {
                auto Fe = frobenius_complex(G, e);
                for (auto i : job.spots) {
                    auto rep = oracle_crosscheck(Fe, i);
                    json diff = json::array();
                    for (auto [t, a, b] : rep.diff) diff.push_back({{"degree", t}, {"gb", a}, {"oracle", b}});
                    instances.push_back({{"e", e},
                                         {"spot", i},
                                         {"finite", rep.finite},
                                         {"gb_length", rep.gb_length},
                                         {"oracle_length", rep.oracle_length},
                                         {"degree_bound", rep.degree_bound},
                                         {"match", rep.match},
                                         {"diff", diff}});
                    if (!rep.match) ++mismatches;
                }
            }
            out["instances"] = instances;
            out["mismatches"] = mismatches;
            if (mismatches) report.exit_code = kComputationError;
            break;
        }
    }
}

}  // namespace

Report execute(const JobSpec& job, const ExecOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.result = json::object();
    report.result["command"] = std::string(to_string(job.command));
    report.result["job"] = to_text(job);
    Session session(job, options);
    try {
        run_command(job, options, session, report);
    } catch (const std::exception& err) {
        if (is_input_error(err)) throw;
        report.result["error"] = {{"kind", "computation"}, {"message", err.what()}};
        report.exit_code = kComputationError;
    }
    report.cache_hit = session.cache_hit();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json Report::document(std::string_view input_hash) const {
    return {{"result", result},
            {"provenance",
             {{"tool", std::string(kToolName)},
              {"version", std::string(tool_version())},
              {"input_hash", std::string(input_hash)},
              {"cache_hit", cache_hit},
              {"elapsed_ms", elapsed_ms}}}};
}

std::string csv_text(const std::vector<CsvRow>& rows) {
    std::string out = "e,q,i,lambda,normalized\n";
    for (const auto& r : rows)
        out += std::to_string(r.e) + "," + std::to_string(r.q) + "," + std::to_string(r.i) + "," +
               std::to_string(r.lambda) + "," + shortest(r.normalized) + "\n";
    return out;
}

}  // namespace frobtor::cli
