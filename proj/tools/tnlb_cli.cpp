#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "tnlb/errors.hpp"
#include "tnlb/job.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tnlb::ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const tnlb::json& report, const std::string& format) {
    if (format == "text")
        std::cout << tnlb::report_to_text(report);
    else
        std::cout << report.dump() << "\n";
}

// batch input: a JSON-lines file (one job object per nonempty line) or a
// directory of *.json job files, taken in sorted order
std::vector<tnlb::JobSpec> load_batch(const std::string& path) {
    std::vector<tnlb::JobSpec> jobs;
    if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto& ent : fs::directory_iterator(path))
            if (ent.path().extension() == ".json") files.push_back(ent.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            tnlb::JobSpec spec = tnlb::parse_job_text(slurp(f.string()));
            if (spec.name.empty()) spec.name = f.stem().string();
            jobs.push_back(std::move(spec));
        }
        return jobs;
    }
    std::istringstream in(slurp(path));
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            jobs.push_back(tnlb::parse_job_text(line));
        } catch (const tnlb::ParseError& e) {
            throw tnlb::ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return jobs;
}

std::string field_str(const tnlb::json& r, const char* key) {
    if (!r.contains(key)) return "-";
    const auto& v = r.at(key);
    return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological lower bounds for Thurston-type norms from group presentations"};
    app.require_subcommand(1);

    std::string job_path, format = "json";
    int epsilon = 0;
    bool strict = false, polytope = false;

    auto* bound = app.add_subcommand("bound", "run one bound job");
    bound->add_option("--job", job_path, "job file (JSON)")->required();
    bound->add_option("--epsilon", epsilon, "boundary term for manifold mode (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    bound->add_flag("--strict", strict, "fail instead of defaulting epsilon to 1");
    bound->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* alex = app.add_subcommand("alexander", "polynomial, norm and support data");
    alex->add_option("--job", job_path, "job file (JSON)")->required();
    alex->add_flag("--polytope", polytope, "include Newton polytope vertices");
    alex->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string batch_path;
    unsigned jobs_n = 0;
    auto* batch = app.add_subcommand("batch", "run many bound jobs");
    batch->add_option("file", batch_path, "JSON-lines file or directory of .json jobs")
        ->required();
    batch->add_option("--jobs", jobs_n, "worker count (default: hardware, or TNLB_JOBS)");
    batch->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        tnlb::RunOptions opt;
        opt.strict = strict;
        opt.polytope = polytope;
        if (epsilon != 0) opt.epsilon_override = epsilon;

        if (bound->parsed()) {
            tnlb::JobSpec spec = tnlb::parse_job_text(slurp(job_path));
            tnlb::JobOutcome out = tnlb::run_bound_job(spec, opt);
            emit(out.report, format);
            return out.exit_code;
        }
        if (alex->parsed()) {
            tnlb::JobSpec spec = tnlb::parse_job_text(slurp(job_path));
            tnlb::JobOutcome out = tnlb::run_alexander_job(spec, opt);
            emit(out.report, format);
            return out.exit_code;
        }
        if (batch->parsed()) {
            if (jobs_n == 0)
                if (const char* env = std::getenv("TNLB_JOBS"))
                    jobs_n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
            std::vector<tnlb::JobSpec> jobs = load_batch(batch_path);
            tnlb::BatchResult res = tnlb::run_batch(jobs, opt, jobs_n);
            for (const auto& o : res.outcomes) emit(o.report, format);
            if (format == "text") {
                std::cout << "\n" << std::left << std::setw(20) << "job" << std::setw(10)
                          << "rank" << std::setw(10) << "bound" << "\n";
                for (size_t i = 0; i < res.outcomes.size(); ++i) {
                    const auto& r = res.outcomes[i].report;
                    std::string name = r.contains("name") ? field_str(r, "name")
                                                          : "#" + std::to_string(i + 1);
                    std::cout << std::left << std::setw(20) << name << std::setw(10)
                              << field_str(r, "rank") << std::setw(10)
                              << field_str(r, "bound") << "\n";
                }
            }
            return res.exit_code;
        }
    } catch (const tnlb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const tnlb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
