#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcc/api.hpp"
#include "fcc/json_io.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fcc::SpecError("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw fcc::SpecError("cannot open output file: " + output);
    out << text;
}

std::string check_text(const json& report) {
    std::ostringstream out;
    for (const auto& [key, value] : report.items()) {
        if (value.is_boolean()) {
            out << key << ": " << (value.get<bool>() ? "pass" : "FAIL") << "\n";
        } else if (value.is_string()) {
            out << key << ": " << value.get<std::string>() << "\n";
        } else if (value.is_array()) {
            out << key << ": FAIL (" << value.size() << " violations)\n";
        } else if (value.is_object()) {
            for (const auto& [k2, v2] : value.items())
                if (v2.is_boolean())
                    out << key << "." << k2 << ": " << (v2.get<bool>() ? "pass" : "FAIL") << "\n";
        }
    }
    return out.str();
}

std::string verify_text(const json& summary) {
    std::ostringstream out;
    for (const auto& c : summary["cases"]) {
        out << "case " << c["id"].get<std::string>() << ": "
            << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
        for (const auto& chk : c["checks"]) {
            out << "  " << chk["name"].get<std::string>() << ": "
                << (chk["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
            if (!chk["pass"].get<bool>() && !chk["detail"].get<std::string>().empty())
                out << "    " << chk["detail"].get<std::string>() << "\n";
        }
    }
    out << (summary["pass"].get<bool>() ? "all cases pass" : "FAILURES present") << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for regular F-manifolds with compatible connection"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string output;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", output, "Write the report to a file instead of stdout");

    auto* gen = app.add_subcommand("gen-a0", "Build the general solution a0 from a spec file");
    gen->fallthrough();
    std::string gen_spec;
    gen->add_option("--spec", gen_spec, "Spec file (JSON)")->required();

    auto* check = app.add_subcommand("check", "Run verification suites on a spec file");
    check->fallthrough();
    std::string check_spec;
    fcc::CheckRequest req;
    check->add_option("--spec", check_spec, "Spec file (JSON)")->required();
    check->add_flag("--master", req.master, "Master-equation residuals of a0");
    check->add_flag("--connection", req.connection,
                    "Torsion, flat unit, and d_nabla closure of the compatible connection");
    check->add_flag("--curvature", req.curvature, "Riemann tensor, 3RC condition, e-flatness");
    check->add_flag("--dual", req.dual, "Dual structure and dual-connection flatness");
    check->add_flag("--metric", req.metric, "Invariance/Killing/bridge checks of the metric");
    check->add_option("--hierarchy", req.hierarchy,
                      "Generate the hierarchy to depth K and verify commutation/independence");

    auto* verify = app.add_subcommand("verify-paper",
                                      "Reproduce the published reference tables exactly");
    verify->fallthrough();
    std::vector<std::string> case_ids;
    verify->add_option("--case", case_ids, "Restrict to one or more case ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInput;
    }

    try {
        if (gen->parsed()) {
            std::string out = fcc::gen_a0_json(read_file(gen_spec));
            if (format == "json")
                emit(out + "\n", output);
            else
                emit(json::parse(out)["a0"].get<std::string>() + "\n", output);
            return kExitPass;
        }

        if (check->parsed()) {
            if (!req.master && !req.connection && !req.curvature && !req.dual && !req.metric &&
                req.hierarchy < 0) {
                req.master = req.connection = req.curvature = true;
            }
            fcc::CheckOutcome out = fcc::run_check(read_file(check_spec), req);
            if (format == "json")
                emit(out.report + "\n", output);
            else
                emit(check_text(json::parse(out.report)), output);
            return out.pass ? kExitPass : kExitFail;
        }

        fcc::CheckOutcome out = fcc::run_verify(case_ids);
        if (format == "json")
            emit(out.report + "\n", output);
        else
            emit(verify_text(json::parse(out.report)), output);
        return out.pass ? kExitPass : kExitFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const fcc::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
}
