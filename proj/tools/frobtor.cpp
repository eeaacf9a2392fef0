#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "frobtor/cli.hpp"
#include "frobtor/errors.hpp"

namespace cli = frobtor::cli;

namespace {

int input_error(const std::string& where, const std::string& message) {
    std::cerr << "frobtor: " << where << (where.empty() ? "" : ": ") << message << "\n";
    return cli::kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius-twisted homology lengths, Hilbert-Kunz data and regularity verdicts"};
    std::string job_path, spot_text, c_text, csv_path, out_path, cache_dir;
    std::optional<unsigned> emax;
    std::optional<std::size_t> length;
    std::optional<double> tol;
    bool no_cache = false;
    unsigned threads = 1;

    app.add_option("--job", job_path, "Job file ([ring] and [job] sections)")->required();
    app.add_option("--emax", emax, "Largest Frobenius exponent e");
    app.add_option("--spot", spot_text, "Homological spot(s), comma separated");
    app.add_option("--length", length, "Length of the resolution of k");
    app.add_option("--tol", tol, "Tolerance on normalized estimates")->check(CLI::PositiveNumber);
    app.add_option("--c", c_text, "Candidate test element");
    app.add_option("--csv", csv_path, "Write the length table as CSV");
    app.add_option("--out", out_path, "Write the JSON report here instead of stdout");
    app.add_option("--cache-dir", cache_dir, "Cache directory (default: $FROBTOR_CACHE_DIR or ~/.cache/frobtor)");
    app.add_flag("--no-cache", no_cache, "Neither read nor write the cache");
    app.add_option("--threads", threads, "Worker threads for independent Frobenius exponents")
        ->check(CLI::Range(1u, 256u));
    app.set_version_flag("--version", std::string(cli::tool_version()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kInputError;
    }

    std::ifstream in(job_path, std::ios::binary);
    if (!in) return input_error(job_path, "cannot read job file");
    std::stringstream buf;
    buf << in.rdbuf();

    cli::JobSpec job;
    try {
        job = cli::parse_jobspec(buf.str());
        if (emax) job.emax = *emax;
        if (length) job.length = *length;
        if (tol) job.tol = *tol;
        if (app.count("--spot")) job.spots = cli::parse_spot_list(spot_text);
        if (app.count("--c")) job.c = cli::parse_multiplier(job, c_text);
    } catch (const frobtor::ParseError& e) {
        return input_error(job_path, e.what());
    } catch (const std::exception& e) {
        return input_error(job_path, e.what());
    }

    cli::ExecOptions options;
    options.threads = threads;
    if (!no_cache) options.cache_dir = cache_dir.empty() ? cli::default_cache_dir() : std::filesystem::path(cache_dir);

    cli::Report report;
    try {
        report = cli::execute(job, options);
    } catch (const std::exception& e) {
        if (cli::is_input_error(e)) return input_error(job_path, e.what());
        std::cerr << "frobtor: " << e.what() << "\n";
        return cli::kComputationError;
    }

    const std::string document = report.document(cli::sha256_hex(cli::to_text(job))).dump(2) + "\n";
    try {
        if (!out_path.empty())
            cli::write_atomically(out_path, document);
        else
            std::cout << document;
        if (!csv_path.empty()) cli::write_atomically(csv_path, cli::csv_text(report.csv));
    } catch (const std::exception& e) {
        std::cerr << "frobtor: " << e.what() << "\n";
        return cli::kIoError;
    }
    if (report.result.contains("error")) std::cerr << "frobtor: " << report.result["error"]["message"].get<std::string>() << "\n";
    return report.exit_code;
}
