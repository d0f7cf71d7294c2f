#include "apolar/cli.hpp"

#include "apolar/bounds.hpp"
#include "apolar/errors.hpp"
#include "apolar/lemmas.hpp"
#include "apolar/report_io.hpp"
#include "apolar/text.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace apolar::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_budget(const std::string& text, const char* source) {
    if (text.empty() || text.size() > 18 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw InputError(std::string(source) + " must be a positive integer (got '" + text + "')");
    }
    const std::uint64_t v = std::stoull(text);
    if (v == 0) throw InputError(std::string(source) + " must be a positive integer (got '" + text + "')");
    return v;
}

std::string read_input(const JobConfig& job, std::string& origin) {
    if (!job.file.empty()) {
        if (!job.polynomial.empty()) throw InputError("give the polynomial inline or with --file, not both");
        std::ifstream in(job.file);
        if (!in) throw InputError("cannot read " + job.file);
        std::ostringstream buf;
        buf << in.rdbuf();
        origin = job.file;
        return buf.str();
    }
    if (job.polynomial.empty()) throw InputError("no polynomial given (pass it inline or with --file)");
    origin = "input";
    return job.polynomial;
}

void emit(std::ostream& out, Format format, const Json& j, const std::string& text) {
    if (format == Format::Json) {
        out << j.dump(2) << '\n';
    } else {
        out << text;
    }
}

int execute(const JobConfig& job, std::ostream& out) {
    if (job.command == "check") {
        if (!job.lemmas) throw InputError("check: nothing to do (pass --lemmas)");
        const std::vector<LemmaCheck> results = run_lemma_suite();
        bool all = true;
        Json j = Json::array();
        std::ostringstream text;
        for (const auto& r : results) {
            all = all && r.passed;
            j.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
            text << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
            if (!r.passed) text << ": " << r.detail;
            text << '\n';
        }
        emit(out, job.format, j, text.str());
        return all ? kExitOk : kExitCheckFailed;
    }

    const VarSpace space = parse_groups(job.groups);
    std::string origin;
    const std::string source = read_input(job, origin);
    MultiPoly f = [&] {
        try {
            return parse_polynomial(source, space);
        } catch (const ParseError& e) {
            throw InputError(origin + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
        }
    }();
    require_nonzero(f, job.command.c_str());

    AnalysisOptions options;
    options.matrix_budget = job.budget;
    options.root_digits = job.precision;

    if (job.command == "analyze") {
        options.verdict_powers = job.k;
        const BoundReport report = analyze(f, options);
        emit(out, job.format, to_json(report), to_text(report));
    } else if (job.command == "hf") {
        if (largest_catalecticant_entries(f.space(), f.mdeg()) > job.budget) {
            throw ResourceError("input needs a catalecticant larger than the matrix budget");
        }
        const HilbertTable table = hilbert_function(f);
        emit(out, job.format, to_json(table), to_text(table));
    } else if (job.command == "gens") {
        if (largest_catalecticant_entries(f.space(), f.mdeg()) > job.budget) {
            throw ResourceError("input needs a catalecticant larger than the matrix budget");
        }
        const GeneratorProfile profile = minimal_generator_degrees(f);
        emit(out, job.format, to_json(profile), to_text(profile));
    } else if (job.command == "power") {
        const AsymptoticSequence seq = asymptotic_sequence(f, job.k, options);
        std::vector<StarVerdict> verdicts;
        for (unsigned k = 1; k <= job.k; ++k) verdicts.push_back(star_certificate(f, k, options));
        emit(out, job.format, to_json(seq, verdicts), to_text(seq, verdicts));
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Apolarity-based bounds on Waring, cactus and border ranks", "apolar"};
    app.require_subcommand(1);

    JobConfig job;
    std::string format = "json";
    std::string budget;
    job.precision = kDefaultRootDigits;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("polynomial", job.polynomial, "polynomial text, e.g. \"x0*x1^2\"");
        sub->add_option("--groups,-g", job.groups, "variable groups, e.g. x:3,y:2")->required();
        sub->add_option("--file,-f", job.file, "read the polynomial from a file ('#' comments allowed)");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--budget", budget, "largest catalecticant (entries) allowed; overrides APOLAR_BUDGET");
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "full bound report");
    add_input(analyze_cmd);
    add_output(analyze_cmd);
    analyze_cmd->add_option("--k", job.k, "attach star verdicts for tensor powers 1..K")->check(CLI::PositiveNumber);

    CLI::App* hf_cmd = app.add_subcommand("hf", "Hilbert function of the apolar algebra");
    add_input(hf_cmd);
    add_output(hf_cmd);

    CLI::App* gens_cmd = app.add_subcommand("gens", "minimal generator degrees of the apolar ideal");
    add_input(gens_cmd);
    add_output(gens_cmd);

    CLI::App* power_cmd = app.add_subcommand("power", "flattening bounds of tensor powers and star verdicts");
    add_input(power_cmd);
    add_output(power_cmd);
    power_cmd->add_option("--k", job.k, "largest tensor power")->required()->check(CLI::PositiveNumber);
    power_cmd->add_option("--precision", job.precision, "significant digits of k-th roots")
        ->check(CLI::Range(1U, 200U));

    CLI::App* check_cmd = app.add_subcommand("check", "run the built-in lemma witnesses");
    check_cmd->add_flag("--lemmas", job.lemmas, "Kronecker, tensor-apolar and Hilbert multiplicativity checks");
    check_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    for (CLI::App* sub : app.get_subcommands()) job.command = sub->get_name();
    job.format = format == "text" ? Format::Text : Format::Json;

    try {
        if (!budget.empty()) {
            job.budget = parse_budget(budget, "--budget");
        } else if (const char* env = std::getenv("APOLAR_BUDGET"); env != nullptr && *env != '\0') {
            job.budget = parse_budget(env, "APOLAR_BUDGET");
        } else {
            job.budget = kDefaultMatrixBudget;
        }
        return execute(job, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ParseError& e) {
        err << "error: groups:" << e.line() << ":" << e.column() << ": " << e.message() << '\n';
        return kExitInputError;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

} // namespace apolar::cli
