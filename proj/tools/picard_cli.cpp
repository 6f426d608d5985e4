// picard: exact verification of the discrete-series character values, the
// Weyl-orbit local sums and the endoscopic cancellation for GU(2,1).
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid invocation.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "picard/eval_model.hpp"
#include "picard/golden.hpp"
#include "picard/laurent_io.hpp"

using namespace picard;

namespace {

int run(int argc, char** argv) {
    CLI::App app{"exact symbolic verification engine for the GU(2,1) parabolic-term computation"};
    app.require_subcommand(1);

    std::string side = "G", packet, chamber = "pos", parabolic = "Pu", format = "json";
    std::string case_id, stage = "open", golden_dir;
    int sum_k = 1;
    bool sum_all = false, cd_view = false;

    auto parse_side = [&]() { return side == "H" ? Side::H : Side::G; };
    auto parse_chamber = [&]() { return chamber == "neg" ? Chamber::neg : Chamber::pos; };
    auto parse_parabolic = [&]() { return parabolic == "Pd" ? Parabolic::Pd : Parabolic::Pu; };
    auto parse_obj = [&]() {
        return parse_side() == Side::G ? TestObject::G : TestObject::H_combination;
    };

    // char-infinity
    auto* c_char = app.add_subcommand("char-infinity", "stable character values on the torus");
    c_char->add_option("--side", side)->check(CLI::IsMember({"G", "H"}));
    c_char->add_option("--packet", packet)->check(CLI::IsMember({"Pi", "rho+", "rho-", "rho0"}));
    c_char->add_option("--chamber", chamber)->check(CLI::IsMember({"pos", "neg"}));
    c_char->add_option("--format", format)->check(CLI::IsMember({"json", "latex"}));

    // dcoeffs
    auto* c_d = app.add_subcommand("dcoeffs", "exponential and Fourier coefficient tables");
    c_d->add_option("--side", side)->check(CLI::IsMember({"G", "H"}));
    c_d->add_option("--parabolic", parabolic)->check(CLI::IsMember({"Pu", "Pd"}));
    c_d->add_flag("--cd", cd_view, "emit the exponential coefficients instead of the d table");
    c_d->add_option("--format", format)->check(CLI::IsMember({"json"}));

    // psums
    auto* c_p = app.add_subcommand("psums", "local sums at p by case label");
    c_p->add_option("--case", case_id, "A1..F2.3 or H-A1..H-F2.3")->required();
    c_p->add_option("--format", format)->check(CLI::IsMember({"json", "latex"}));

    // stabilize
    auto* c_s = app.add_subcommand("stabilize", "major-sum pipeline stages");
    auto* sum_opt = c_s->add_option("--sum", sum_k)->check(CLI::Range(1, 3));
    c_s->add_flag("--all", sum_all, "the rescaled total of the three combined sums");
    c_s->add_option("--side", side)->check(CLI::IsMember({"G", "H"}));
    c_s->add_option("--stage", stage)
        ->check(CLI::IsMember({"open", "glued", "merged", "combined"}));
    c_s->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    // constants
    auto* c_c = app.add_subcommand("constants", "the constant ledger");
    c_c->add_option("--format", format)->check(CLI::IsMember({"json"}));

    // verify-all
    auto* c_v = app.add_subcommand("verify-all", "compare every output against the golden corpus");
    c_v->add_option("--golden-dir", golden_dir);
    c_v->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    // gen-golden
    std::string out_dir;
    auto* c_g = app.add_subcommand("gen-golden", "write the golden corpus");
    c_g->add_option("--out", out_dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (c_char->parsed()) {
        Packet p;
        if (parse_side() == Side::G) {
            if (!packet.empty() && packet != "Pi") {
                std::cerr << "char-infinity: side G has only the packet Pi\n";
                return 2;
            }
            p = Packet::G_Pi;
        } else {
            if (packet.empty()) {
                std::cerr << "char-infinity: side H needs --packet rho+|rho-|rho0\n";
                return 2;
            }
            if (packet == "Pi") {
                std::cerr << "char-infinity: Pi is a G packet\n";
                return 2;
            }
            p = packet == "rho+"   ? Packet::H_rho_plus
                : packet == "rho-" ? Packet::H_rho_minus
                                   : Packet::H_rho_zero;
        }
        if (format == "latex")
            std::cout << emit_latex(stable_character(p, parse_chamber())) << "\n";
        else
            std::cout << character_json(p, parse_chamber());
        return 0;
    }

    if (c_d->parsed()) {
        if (cd_view)
            std::cout << cd_json(parse_obj(), parabolic_chamber(parse_parabolic()));
        else
            std::cout << dcoeff_json(parse_obj(), parse_parabolic());
        return 0;
    }

    if (c_p->parsed()) {
        auto id = parse_case_id(case_id);
        if (!id) {
            std::cerr << "psums: unknown case label '" << case_id << "'\n";
            return 2;
        }
        if (format == "latex") {
            if (id->series != 1) {
                std::cerr << "psums: latex output exists only for the full sums\n";
                return 2;
            }
            std::cout << emit_latex(full_sum(*id)) << "\n";
        } else {
            std::cout << psum_json(*id);
        }
        return 0;
    }

    if (c_s->parsed()) {
        if (sum_all) {
            TermSum t = theorem_7_1();
            std::cout << (format == "text" ? t.to_text() : theorem_json());
            return 0;
        }
        if (!*sum_opt) {
            std::cerr << "stabilize: need --sum 1|2|3 or --all\n";
            return 2;
        }
        if (stage == "combined") {
            TermSum t = combined_sum(sum_k);
            std::cout << (format == "text" ? t.to_text() : combined_json(sum_k));
            return 0;
        }
        Stage st = stage == "open" ? Stage::open : stage == "glued" ? Stage::glued : Stage::merged;
        TermSum t = major_sum_stage(parse_side(), sum_k, st);
        std::cout << (format == "text" ? t.to_text() : stage_json(parse_side(), sum_k, st));
        return 0;
    }

    if (c_c->parsed()) {
        std::cout << constants_json();
        return 0;
    }

    if (c_v->parsed()) {
        std::string dir = golden_dir;
        if (dir.empty())
            if (const char* env = std::getenv("PICARD_TRACE_GOLDEN")) dir = env;
        if (dir.empty()) dir = "golden";
        Report r = verify_corpus(dir);
        std::cout << (format == "json" ? r.to_json() : r.to_text());
        return r.ok() ? 0 : 1;
    }

    if (c_g->parsed()) {
        write_corpus(out_dir);
        std::cout << "wrote " << golden_corpus().size() << " files to " << out_dir << "\n";
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "picard: " << e.what() << "\n";
        return 2;
    }
}
