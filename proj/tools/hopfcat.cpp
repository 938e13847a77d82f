// hopfcat: exact computations in the category of cocommutative Hopf
// algebras over the rationals. Loads JSON definitions, runs the categorical
// constructions, and emits machine-readable reports.
//
// Exit codes:
//   0  command ran, verdict positive
//   1  command ran, verdict negative (e.g. an input failing `verify`)
//   2  malformed input (JSON shape, unparsable scalars, bad indices)
//   3  mathematical precondition violated (not parallel, not an ideal, ...)
//   4  internal law violated; the report carries the counterexample

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hopfcat/catalog.hpp"
#include "hopfcat/colimits.hpp"
#include "hopfcat/io.hpp"
#include "hopfcat/limits.hpp"
#include "hopfcat/newman.hpp"
#include "hopfcat/smash.hpp"
#include "hopfcat/sweep.hpp"

namespace {

using namespace hopfcat;
namespace fs = std::filesystem;

struct Options {
    std::string out_path;
    bool pretty = false;
};

void add_digest(Report& report, const fs::path& path) {
    report.inputs.emplace_back(path.string(), io::fnv1a_digest(io::read_file(path)));
}

int emit(Report& report, const Options& opt, int exit_code,
         std::chrono::steady_clock::time_point started) {
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    const std::string text = report.serialize(opt.pretty);
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw SchemaError("cannot write report to " + opt.out_path);
        out << text;
    }
    std::cerr << "hopfcat: " << report.command << " -> " << report.status << " ("
              << report.elapsed_ms << " ms)\n";
    return exit_code;
}

Json verification_to_json(const VerificationReport& v) {
    Json j;
    for (const auto& [name, value] : v.entries()) j[name] = value;
    return j;
}

Catalog resolve_catalog(const std::string& dir_arg) {
    if (!dir_arg.empty()) return Catalog::from_directory(dir_arg);
    if (const char* env = std::getenv("HOPFCAT_CATALOG"); env && *env)
        return Catalog::from_directory(env);
    return Catalog::builtin();
}

std::string catalog_input_name(const std::string& dir_arg) {
    if (!dir_arg.empty()) return dir_arg;
    if (const char* env = std::getenv("HOPFCAT_CATALOG"); env && *env) return env;
    return "builtin:catalog";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions and instance checks for finite-dimensional "
                 "cocommutative Hopf algebras over the rationals"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--out", opt.out_path, "write the report JSON to this file instead of stdout");
    app.add_flag("--pretty", opt.pretty, "indent the report JSON");
    app.fallthrough();

    std::string path_a, path_b, catalog_dir;

    auto* cmd_verify = app.add_subcommand("verify", "check every Hopf axiom of an algebra file");
    cmd_verify->add_option("algebra", path_a, "Hopf algebra or group table JSON")->required();

    auto* cmd_kernel = app.add_subcommand("kernel", "Hopf kernel of a morphism");
    cmd_kernel->add_option("morphism", path_a)->required();

    auto* cmd_cokernel = app.add_subcommand("cokernel", "Hopf cokernel of a morphism");
    cmd_cokernel->add_option("morphism", path_a)->required();

    auto* cmd_equalizer = app.add_subcommand("equalizer", "equalizer of a parallel pair");
    cmd_equalizer->add_option("f", path_a)->required();
    cmd_equalizer->add_option("g", path_b)->required();

    auto* cmd_coequalizer = app.add_subcommand("coequalizer", "coequalizer of a parallel pair");
    cmd_coequalizer->add_option("f", path_a)->required();
    cmd_coequalizer->add_option("g", path_b)->required();

    auto* cmd_product = app.add_subcommand("product", "binary product of two algebras");
    cmd_product->add_option("a", path_a)->required();
    cmd_product->add_option("b", path_b)->required();

    auto* cmd_pullback = app.add_subcommand("pullback", "pullback of a cospan");
    cmd_pullback->add_option("f", path_a)->required();
    cmd_pullback->add_option("g", path_b)->required();

    auto* cmd_smash = app.add_subcommand("smash", "smash product of an action");
    cmd_smash->add_option("action", path_a)->required();

    auto* cmd_newman = app.add_subcommand("newman", "tau/sigma roundtrip for a sub-Hopf algebra");
    cmd_newman->add_option("algebra", path_a)->required();
    cmd_newman->add_option("subspace", path_b)->required();

    auto* cmd_abelian = app.add_subcommand("abelian", "abelian-object criterion vs commutativity");
    cmd_abelian->add_option("algebra", path_a)->required();

    auto* cmd_axioms = app.add_subcommand("axioms", "run the catalog-wide property sweep");
    cmd_axioms->add_option("catalog", catalog_dir, "directory of group table JSONs");

    CLI11_PARSE(app, argc, argv);
    const auto started = std::chrono::steady_clock::now();
    Report report;
    report.status = "pass";

    try {
        if (*cmd_verify) {
            report.command = "verify";
            add_digest(report, path_a);
            const HopfPtr h = io::load_hopf(path_a);
            const VerificationReport v = verify_hopf(*h);
            report.result = {{"dim", h->dim()}, {"axioms", verification_to_json(v)}, {"all", v.all()}};
            report.status = v.all() ? "pass" : "fail";
            return emit(report, opt, v.all() ? 0 : 1, started);
        }
        if (*cmd_kernel) {
            report.command = "kernel";
            add_digest(report, path_a);
            const Morphism f = io::load_morphism(path_a);
            const SubHopfPresentation k = hopf_kernel(f);
            report.result = {{"dim", k.algebra->dim()},
                             {"object", io::hopf_to_json(*k.algebra)},
                             {"inclusion", io::matrix_to_json(k.inclusion.matrix())}};
            return emit(report, opt, 0, started);
        }
        if (*cmd_cokernel) {
            report.command = "cokernel";
            add_digest(report, path_a);
            const Morphism f = io::load_morphism(path_a);
            const QuotientPresentation q = hopf_cokernel(f);
            report.result = {{"dim", q.algebra->dim()},
                             {"object", io::hopf_to_json(*q.algebra)},
                             {"projection", io::matrix_to_json(q.projection.matrix())},
                             {"ideal", io::subspace_to_json(q.ideal)}};
            return emit(report, opt, 0, started);
        }
        if (*cmd_equalizer) {
            report.command = "equalizer";
            add_digest(report, path_a);
            add_digest(report, path_b);
            const Morphism f = io::load_morphism(path_a);
            const Morphism g = io::load_morphism(path_b);
            const SubHopfPresentation e = equalizer(f, g);
            report.result = {{"dim", e.algebra->dim()},
                             {"object", io::hopf_to_json(*e.algebra)},
                             {"inclusion", io::matrix_to_json(e.inclusion.matrix())}};
            return emit(report, opt, 0, started);
        }
        if (*cmd_coequalizer) {
            report.command = "coequalizer";
            add_digest(report, path_a);
            add_digest(report, path_b);
            const Morphism f = io::load_morphism(path_a);
            const Morphism g = io::load_morphism(path_b);
            const QuotientPresentation q = coequalizer(f, g);
            report.result = {{"dim", q.algebra->dim()},
                             {"object", io::hopf_to_json(*q.algebra)},
                             {"projection", io::matrix_to_json(q.projection.matrix())},
                             {"ideal", io::subspace_to_json(q.ideal)}};
            return emit(report, opt, 0, started);
        }
        if (*cmd_product) {
            report.command = "product";
            add_digest(report, path_a);
            add_digest(report, path_b);
            const HopfPtr a = io::load_hopf(path_a);
            const HopfPtr b = io::load_hopf(path_b);
            const LimitCone cone = product(a, b);
            report.result = {{"dim", cone.apex->dim()},
                             {"object", io::hopf_to_json(*cone.apex)},
                             {"projection_left", io::matrix_to_json(cone.legs[0].matrix())},
                             {"projection_right", io::matrix_to_json(cone.legs[1].matrix())}};
            return emit(report, opt, 0, started);
        }
        if (*cmd_pullback) {
            report.command = "pullback";
            add_digest(report, path_a);
            add_digest(report, path_b);
            const Morphism f = io::load_morphism(path_a);
            const Morphism g = io::load_morphism(path_b);
            const Pullback pb = pullback(f, g);
            report.result = {{"dim", pb.cone.apex->dim()},
                             {"object", io::hopf_to_json(*pb.cone.apex)},
                             {"inclusion", io::matrix_to_json(pb.inclusion.matrix())},
                             {"leg_left", io::matrix_to_json(pb.cone.legs[0].matrix())},
                             {"leg_right", io::matrix_to_json(pb.cone.legs[1].matrix())}};
            return emit(report, opt, 0, started);
        }
        if (*cmd_smash) {
            report.command = "smash";
            add_digest(report, path_a);
            const Action action = io::load_action(path_a);
            const SmashProduct sp = smash_product(action);
            report.result = {{"dim", sp.algebra->dim()},
                             {"object", io::hopf_to_json(*sp.algebra)},
                             {"projection", io::matrix_to_json(sp.proj.matrix())},
                             {"section", io::matrix_to_json(sp.sect.matrix())}};
            return emit(report, opt, 0, started);
        }
        if (*cmd_newman) {
            report.command = "newman";
            add_digest(report, path_a);
            add_digest(report, path_b);
            const HopfPtr h = io::load_hopf(path_a);
            const Subspace g = io::load_subspace(path_b, h->dim());
            const LeftIdealCoideal ideal = tau(h, g);
            const Subspace back = sigma(ideal);
            const bool roundtrip = back == g;
            report.result = {{"tau", io::subspace_to_json(ideal.space)},
                             {"sigma", io::subspace_to_json(back)},
                             {"roundtrip", roundtrip}};
            report.status = roundtrip ? "pass" : "fail";
            // A failed roundtrip on a genuine sub-Hopf algebra is a
            // counterexample to the correspondence; the report is the dump.
            return emit(report, opt, roundtrip ? 0 : 4, started);
        }
        if (*cmd_abelian) {
            report.command = "abelian";
            add_digest(report, path_a);
            const HopfPtr h = io::load_hopf(path_a);
            const bool abelian = abelian_object_test(h);
            const bool commutative = is_commutative(*h);
            report.result = {{"abelian", abelian},
                             {"commutative", commutative},
                             {"consistent", abelian == commutative}};
            report.status = abelian == commutative ? "pass" : "fail";
            return emit(report, opt, abelian == commutative ? 0 : 4, started);
        }
        if (*cmd_axioms) {
            report.command = "axioms";
            report.inputs.emplace_back(catalog_input_name(catalog_dir), "");
            const Catalog catalog = resolve_catalog(catalog_dir);
            Json tables = Json::array();
            for (const auto& o : catalog.objects()) tables.push_back(io::group_table_to_json(o.table));
            report.inputs.back().second = io::fnv1a_digest(tables.dump());
            report.result = axioms_report(catalog);
            const bool ok = report.result["status"] == "pass";
            report.status = ok ? "pass" : "fail";
            return emit(report, opt, ok ? 0 : 4, started);
        }
    } catch (const SchemaError& e) {
        std::cerr << "hopfcat: input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "hopfcat: precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        std::cerr << "hopfcat: INVARIANT VIOLATION: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
