// mobius4 command line: verify the claims ledger, export meshes/graphs,
// stream the enumerations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mobius4/export.hpp"

namespace {

int write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open for writing: " << out_path << "\n";
        return 3;
    }
    f << content;
    if (!f.good()) {
        std::cerr << "write failed: " << out_path << "\n";
        return 3;
    }
    return 0;
}

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> ids;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) ids.push_back(item);
    return ids;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace mobius4;

    CLI::App app{"exact verifier for the four-strip compound, the triangle polylink and the "
                 "rainbow factorizations of the 4-cube"};
    app.require_subcommand(1);

    // verify
    std::string claims_csv, verify_format = "text", verify_out;
    CLI::App* verify = app.add_subcommand("verify", "run claim checks and print the ledger");
    verify->add_option("--claims", claims_csv, "comma-separated claim ids (default: all)");
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", verify_out, "output path (default: stdout)");

    // export
    std::string kind, which, export_out;
    CLI::App* exp = app.add_subcommand("export", "write meshes, graphs and tables");
    exp->add_option("--kind", kind, "one of: mesh-off mesh-obj hollow-off graph-dot euler-csv "
                                    "gauss-codes curves-json isometries-json factorization-json "
                                    "complexes-json")
        ->required()
        ->check(CLI::IsMember({"mesh-off", "mesh-obj", "hollow-off", "graph-dot", "euler-csv",
                               "gauss-codes", "curves-json", "isometries-json", "factorization-json",
                               "complexes-json"}));
    exp->add_option("--which", which,
                    "object selector: m1..m4 for meshes, t1..t4 for hollow triangles, f/p/fstar/"
                    "pstar for graphs");
    exp->add_option("--out", export_out, "output path (default: stdout)");

    // enumerate
    std::string enum_kind, enum_format = "text";
    CLI::App* enumerate = app.add_subcommand("enumerate", "stream enumeration results");
    enumerate->add_option("--kind", enum_kind, "rainbow-factorizations or toroidal-subgraphs")
        ->required()
        ->check(CLI::IsMember({"rainbow-factorizations", "toroidal-subgraphs"}));
    enumerate->add_option("--format", enum_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            claims::Ledger ledger;
            try {
                ledger = claims_csv.empty() ? claims::run_all()
                                            : claims::run_claims(split_ids(claims_csv));
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
            std::string content =
                verify_format == "json" ? io::ledger_json(ledger) : io::ledger_text(ledger);
            int rc = write_output(content, verify_out);
            if (rc != 0) return rc;
            return ledger.any_internal_refuted() ? 1 : 0;
        }

        if (exp->parsed()) {
            std::string content;
            const claims::Context& ctx = claims::Context::get();
            auto strip_index = [&](const std::string& w, char prefix) {
                if (w.size() == 2 && w[0] == prefix && w[1] >= '1' && w[1] <= '4') return w[1] - '1';
                std::cerr << "--which must be " << prefix << "1.." << prefix << "4\n";
                std::exit(2);
            };
            if (kind == "mesh-off") {
                int i = strip_index(which.empty() ? "m1" : which, 'm');
                content = io::strip_mesh_off(strips::build_mesh(ctx.strip[i]));
            } else if (kind == "mesh-obj") {
                int i = strip_index(which.empty() ? "m1" : which, 'm');
                content = io::strip_mesh_obj(strips::build_mesh(ctx.strip[i]));
            } else if (kind == "hollow-off") {
                int i = strip_index(which.empty() ? "t1" : which, 't');
                content = io::hollow_triangle_off(i + 1);
            } else if (kind == "graph-dot") {
                std::string w = which.empty() ? "f" : which;
                if (w == "f") content = io::factorization_dot(ctx.rainbow.f, "F");
                else if (w == "p") content = io::factorization_dot(ctx.parallel, "P");
                else if (w == "fstar") content = io::quotient_dot(ctx.projection.fstar, "Fstar");
                else if (w == "pstar") content = io::quotient_dot(ctx.projection.pstar, "Pstar");
                else {
                    std::cerr << "--which must be f, p, fstar or pstar\n";
                    return 2;
                }
            } else if (kind == "euler-csv") {
                content = io::euler_square_csv();
            } else if (kind == "gauss-codes") {
                content = io::gauss_codes_text();
            } else if (kind == "curves-json") {
                content = io::curves_json();
            } else if (kind == "isometries-json") {
                content = io::isometries_json();
            } else if (kind == "factorization-json") {
                std::string w = which.empty() ? "f" : which;
                if (w == "f") content = io::factorization_json(ctx.rainbow.f, "F");
                else if (w == "p") content = io::factorization_json(ctx.parallel, "P");
                else {
                    std::cerr << "--which must be f or p\n";
                    return 2;
                }
            } else if (kind == "complexes-json") {
                content = io::complexes_json();
            }
            return write_output(content, export_out);
        }

        if (enumerate->parsed()) {
            std::string content;
            if (enum_kind == "rainbow-factorizations")
                content = enum_format == "json" ? io::enumerate_rainbow_json()
                                                : io::enumerate_rainbow_text();
            else
                content = enum_format == "json" ? io::enumerate_toroidal_json()
                                                : io::enumerate_toroidal_text();
            std::cout << content;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
