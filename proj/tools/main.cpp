#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Exact quasi-ordered languages, word posets and wreath-product characters"};
    std::string cmd;
    std::string in_path;
    std::string out_path;
    std::optional<int> degree, nmax, budget;
    bool pretty = false;
    app.add_option("cmd", cmd, "Subcommand such as poset.leq; may also be given as \"cmd\" in the request");
    app.add_option("--in", in_path, "Request file (default: stdin)");
    app.add_option("--out", out_path, "Response file (default: stdout)");
    app.add_option("--degree", degree, "Degree cap for series");
    app.add_option("--nmax", nmax, "Largest n for per-degree data");
    app.add_option("--budget", budget, "Simplex budget for Segre powers");
    app.add_flag("--pretty", pretty, "Indent the response");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (in_path.empty()) {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(in_path);
        if (!in) {
            std::cerr << "cannot read " << in_path << '\n';
            return 1;
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }

    using qordkit::json::Json;
    Json response;
    Json request = Json::parse(text.empty() ? "{}" : text, nullptr, false);
    if (request.is_discarded()) {
        response = Json{{"status", "error"}, {"diagnostics", Json::array({"invalid JSON request"})}};
    } else {
        if (request.is_object()) {
            if (!cmd.empty()) {
                request["cmd"] = cmd;
            }
            if (degree) {
                request["degree"] = *degree;
            }
            if (nmax) {
                request["nmax"] = *nmax;
            }
            if (budget) {
                request["budget"] = *budget;
            }
        }
        response = qordkit::cli::execute_request(request);
    }

    const std::string out = response.dump(pretty ? 2 : -1) + "\n";
    if (out_path.empty()) {
        std::cout << out;
    } else {
        std::ofstream(out_path) << out;
    }
    return response["status"] == "ok" ? 0 : 1;
}
