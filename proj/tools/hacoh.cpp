#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tasks.hpp"

namespace fs = std::filesystem;
using namespace hacoh;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorCode::ValidationError, "cannot write " + path.string());
    out << content;
}

std::string dump(const cli::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sweedler and measuring cohomology of finite-dimensional Hopf algebras"};
    std::string task, file, out_dir = "hacoh-out", method, recheck_report;
    std::optional<std::uint64_t> budget, seed;
    std::optional<std::size_t> degree;
    bool measuring = false;
    app.add_option("task", task, "check, smash, cohom, sequence, oracle or recheck")
        ->required()
        ->check(CLI::IsMember({"check", "smash", "cohom", "sequence", "oracle", "recheck"}));
    app.add_option("file", file, "problem file (JSON); for recheck also a report.json")->required()->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "directory for report.txt, report.json and witnesses.json");
    app.add_option("--budget", budget, "enumeration cap, overriding budgets.enumeration")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_option("--method", method, "cohomology method")->check(CLI::IsMember({"bruteforce", "bridge"}));
    app.add_option("--degree", degree, "cohomological degree for cohom")->check(CLI::Range(1, 3));
    app.add_flag("--measuring", measuring, "cohom: measuring cohomology of the declared t, n and action");
    app.add_option("--recheck", recheck_report, "re-validate the witnesses of an emitted report instead of computing")
        ->check(CLI::ExistingFile);
    CLI11_PARSE(app, argc, argv);

    try {
        cli::Outcome outcome;
        std::string prefix = "report";
        if (!recheck_report.empty()) {
            outcome = cli::recheck_file(recheck_report);
            prefix = "recheck";
        } else {
            const cli::json doc = [&] {
                std::ifstream in(file);
                std::ostringstream ss;
                ss << in.rdbuf();
                return io::parse_document(ss.str(), file);
            }();
            if (task == "recheck" && doc.contains("problem") && doc.contains("witnesses")) {
                outcome = cli::recheck_file(file);
                prefix = "recheck";
            } else {
                const auto slash = file.find_last_of('/');
                const cli::Problem p =
                    cli::load_problem(doc, {budget, seed}, slash == std::string::npos ? "." : file.substr(0, slash));
                if (p.task != task)
                    raise(ErrorCode::ValidationError, "the file declares task \"" + p.task + "\", not \"" + task + "\"");
                outcome = cli::run(p, {method, degree, measuring});
                if (p.task == "recheck") prefix = "recheck";
            }
        }
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / (prefix + ".txt"), outcome.text);
        write_file(fs::path(out_dir) / (prefix + ".json"), dump(outcome.report));
        if (prefix == "report") write_file(fs::path(out_dir) / "witnesses.json", dump(outcome.witnesses));
        std::cout << outcome.text;
        return outcome.exit_code;
    } catch (const Error& e) {
        std::cerr << "hacoh: " << e.what() << "\n";
        return cli::kInputError;
    }
}
