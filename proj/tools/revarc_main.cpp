// revarc: augment arc-connectivity by reversing designated arcs one at a
// time, never letting the connectivity drop. Exit codes: 0 success/valid,
// 1 blocked-with-certificate or invalid certificate, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "revarc/connectivity.hpp"
#include "revarc/digraph.hpp"
#include "revarc/oracle.hpp"
#include "revarc/reorient.hpp"
#include "revarc/sparsify.hpp"
#include "revarc/tight_sets.hpp"

namespace {

using nlohmann::json;
using namespace revarc;

constexpr int kExitOk = 0;
constexpr int kExitBlockedOrInvalid = 1;
constexpr int kExitInputError = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Accepts "fixture:<name>" anywhere an instance path goes.
Instance load_instance(const std::string& arg) {
    if (arg.rfind("fixture:", 0) == 0) {
        auto fx = oracle::fixture(arg.substr(8));
        return Instance{std::move(fx.digraph), std::move(fx.f)};
    }
    return parse_digraph(slurp(arg));
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

SearchMode parse_mode(const std::string& mode) {
    if (mode == "first") return SearchMode::First;
    if (mode == "best") return SearchMode::Best;
    if (mode == "random") return SearchMode::Random;
    throw std::runtime_error("unknown mode '" + mode + "' (use first|best|random)");
}

json step_record(const SequenceStep& s) { return json{{"type", "step"}, {"arc", s.arc_id}, {"lambda", s.lambda_after}}; }

void print_sequence(const SequenceReport& rep, bool as_json) {
    if (as_json) {
        for (const SequenceStep& s : rep.steps) std::cout << step_record(s) << '\n';
        json tail{{"type", "status"},
                  {"status", to_string(rep.status)},
                  {"lambda_initial", rep.lambda_initial},
                  {"lambda_final", rep.lambda_final()},
                  {"k", rep.k}};
        if (rep.certificate) tail["certificate"] = serialize_certificate(*rep.certificate);
        std::cout << tail << '\n';
        return;
    }
    for (const SequenceStep& s : rep.steps) std::cout << "step " << s.arc_id << " lambda=" << s.lambda_after << '\n';
    std::cout << "lambda: " << rep.lambda_initial << " -> " << rep.lambda_final() << '\n';
    std::cout << "status " << to_string(rep.status) << '\n';
    if (rep.status == SequenceStatus::Blocked && rep.certificate)
        std::cout << serialize_certificate(*rep.certificate);
}

struct CommonArgs {
    std::string instance;
    int k = 2;
    std::string mode = "first";
    std::uint64_t seed = 0;
    int root = 0;
    bool as_json = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_k) {
    cmd->add_option("--instance", args.instance, "instance file or fixture:<name>")->required();
    auto* k_opt = cmd->add_option("--k", args.k, "target arc-connectivity");
    if (needs_k) k_opt->required();
    cmd->add_option("--mode", args.mode, "arc selection: first|best|random");
    cmd->add_option("--seed", args.seed, "RNG seed for --mode random");
    cmd->add_option("--root", args.root, "root vertex for certificates");
    cmd->add_flag("--json", args.as_json, "machine-readable record stream");
}

int run(int argc, char** argv) {
    CLI::App app{"arc-connectivity augmentation by arc reversal"};
    app.require_subcommand(1);

    CommonArgs lambda_args, step_args, seq_args, pipe_args, spars_args, cert_args;
    std::string pipe_orient, spars_out, verify_cert, dot_cert, dot_out, fixture_name, fixture_out;
    CommonArgs verify_args, dot_args;

    auto* cmd_lambda = app.add_subcommand("lambda", "print lambda(D) and a witness cut");
    add_common(cmd_lambda, lambda_args, false);

    auto* cmd_step = app.add_subcommand("step", "find one reversible F-arc or a blocking certificate");
    add_common(cmd_step, step_args, true);

    auto* cmd_seq = app.add_subcommand("sequence", "reverse F-arcs one by one, lambda never decreasing");
    add_common(cmd_seq, seq_args, true);

    auto* cmd_pipe = app.add_subcommand("pipeline", "full augmentation to k in {2,3} via a seed orientation");
    add_common(cmd_pipe, pipe_args, true);
    cmd_pipe->add_option("--orient", pipe_orient, "k-arc-connected seed orientation (instance or fixture:<name>); searched for when omitted");

    auto* cmd_spars = app.add_subcommand("sparsify", "minimal spanning k-arc-connected subgraph");
    add_common(cmd_spars, spars_args, true);
    cmd_spars->add_option("--out", spars_out, "write the surviving instance here instead of stdout");

    auto* cmd_cert = app.add_subcommand("certificate", "build the blocking certificate for an instance");
    add_common(cmd_cert, cert_args, true);

    auto* cmd_verify = app.add_subcommand("verify", "check the six certificate properties");
    add_common(cmd_verify, verify_args, false);
    cmd_verify->add_option("--certificate", verify_cert, "certificate file")->required();

    auto* cmd_fixture = app.add_subcommand("fixture", "emit a named fixture as an instance file");
    cmd_fixture->add_option("name", fixture_name, "fig1|fig2|triangle_example|cycle(n)|bidirected_clique(n)")->required();
    cmd_fixture->add_option("--out", fixture_out, "output path (stdout when omitted)");

    auto* cmd_dot = app.add_subcommand("export-dot", "Graphviz export, optionally with certificate highlighting");
    add_common(cmd_dot, dot_args, false);
    cmd_dot->add_option("--certificate", dot_cert, "certificate file to highlight");
    cmd_dot->add_option("--dot", dot_out, "output path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    if (cmd_lambda->parsed()) {
        Instance inst = load_instance(lambda_args.instance);
        Lambda lam = arc_connectivity(inst.digraph);
        if (lambda_args.as_json) {
            std::cout << json{{"type", "lambda"}, {"lambda", lam.value}, {"witness", lam.witness.side.to_vector()}} << '\n';
        } else {
            std::cout << "lambda=" << lam.value << '\n' << "witness";
            for (int v : lam.witness.side.to_vector()) std::cout << ' ' << v;
            std::cout << '\n';
        }
        return kExitOk;
    }

    if (cmd_step->parsed()) {
        Instance inst = load_instance(step_args.instance);
        StepOutcome out = find_reversible_arc(inst.digraph, inst.f, step_args.k, parse_mode(step_args.mode),
                                              step_args.seed, step_args.root);
        if (out.chosen) {
            if (step_args.as_json)
                std::cout << json{{"type", "step"}, {"arc", *out.chosen}, {"lambda", *out.lambda_after},
                                  {"lambda_before", out.lambda_before}} << '\n';
            else
                std::cout << "step " << *out.chosen << " lambda=" << *out.lambda_after << '\n'
                          << "lambda: " << out.lambda_before << " -> " << *out.lambda_after << '\n';
            return kExitOk;
        }
        if (step_args.as_json)
            std::cout << json{{"type", "blocked"}, {"lambda", out.lambda_before},
                              {"certificate", serialize_certificate(*out.certificate)}} << '\n';
        else
            std::cout << "blocked lambda=" << out.lambda_before << '\n' << serialize_certificate(*out.certificate);
        return kExitBlockedOrInvalid;
    }

    if (cmd_seq->parsed()) {
        Instance inst = load_instance(seq_args.instance);
        SequenceReport rep = monotone_sequence(inst.digraph, inst.f, seq_args.k, parse_mode(seq_args.mode),
                                               seq_args.seed, seq_args.root);
        print_sequence(rep, seq_args.as_json);
        return rep.status == SequenceStatus::Blocked ? kExitBlockedOrInvalid : kExitOk;
    }

    if (cmd_pipe->parsed()) {
        Instance inst = load_instance(pipe_args.instance);
        std::optional<Digraph> seed_orient;
        if (!pipe_orient.empty()) {
            seed_orient = load_instance(pipe_orient).digraph;
        } else {
            seed_orient = oracle::find_seed_orientation(inst.digraph, pipe_args.k);
            if (!seed_orient)
                throw std::runtime_error("no seed orientation found; provide one with --orient");
        }
        SequenceReport rep = corollary_pipeline(inst.digraph, pipe_args.k, *seed_orient,
                                                parse_mode(pipe_args.mode), pipe_args.seed, pipe_args.root);
        print_sequence(rep, pipe_args.as_json);
        return rep.status == SequenceStatus::Blocked ? kExitBlockedOrInvalid : kExitOk;
    }

    if (cmd_spars->parsed()) {
        Instance inst = load_instance(spars_args.instance);
        SparsifyResult res = dalmazzo_sparsify(inst.digraph, spars_args.k);
        long long bound = 2LL * spars_args.k * (inst.digraph.vertex_count() - 1);
        std::cout << "kept=" << res.arc_count << " bound=" << bound << '\n' << "ids";
        for (int id : res.kept.ids()) std::cout << ' ' << id;
        std::cout << '\n';
        ArcSet kept_f;
        for (int id : inst.f.ids())
            if (res.kept.contains(id)) kept_f.insert(id);
        // the survivor keeps its arcs renumbered 0..|kept|-1 in kept order
        std::vector<int> renumbered;
        {
            int pos = 0;
            for (int id : res.kept.ids()) {
                if (kept_f.contains(id)) renumbered.push_back(pos);
                ++pos;
            }
        }
        write_output(spars_out, serialize_instance(inst.digraph.restricted_to(res.kept), ArcSet(renumbered)));
        return kExitOk;
    }

    if (cmd_cert->parsed()) {
        Instance inst = load_instance(cert_args.instance);
        StepOutcome out = find_reversible_arc(inst.digraph, inst.f, cert_args.k, SearchMode::First,
                                              cert_args.seed, cert_args.root);
        if (out.chosen) {
            std::cout << "not blocked: arc " << *out.chosen << " is reversible (lambda "
                      << out.lambda_before << " -> " << *out.lambda_after << ")\n";
            return kExitOk;
        }
        std::cout << serialize_certificate(*out.certificate);
        return kExitBlockedOrInvalid;
    }

    if (cmd_verify->parsed()) {
        Instance inst = load_instance(verify_args.instance);
        Certificate cert = parse_certificate(slurp(verify_cert), inst.digraph.vertex_count());
        VerifyReport report = verify_certificate(inst.digraph, inst.f, cert);
        std::cout << format_report(report);
        return report.valid() ? kExitOk : kExitBlockedOrInvalid;
    }

    if (cmd_fixture->parsed()) {
        auto fx = oracle::fixture(fixture_name);
        write_output(fixture_out, serialize_instance(fx.digraph, fx.f));
        return kExitOk;
    }

    if (cmd_dot->parsed()) {
        Instance inst = load_instance(dot_args.instance);
        std::optional<Certificate> cert;
        if (!dot_cert.empty()) cert = parse_certificate(slurp(dot_cert), inst.digraph.vertex_count());
        write_output(dot_out, to_dot(inst.digraph, inst.f, cert ? &*cert : nullptr));
        return kExitOk;
    }

    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}
