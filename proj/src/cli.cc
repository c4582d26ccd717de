#include <qproj/cli.hh>
#include <qproj/decide.hh>
#include <qproj/enumerate.hh>
#include <qproj/hom.hh>
#include <qproj/oracle.hh>
#include <qproj/text_format.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <map>

using std::string;
using std::vector;

namespace qproj
{
    namespace
    {
        // Reported as exit 2: the input cannot be used.
        struct InputError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        auto load_structure(const string & path) -> Structure
        {
            string text;
            try {
                text = read_file(path);
            }
            catch (const std::runtime_error & e) {
                throw InputError(e.what());
            }

            try {
                auto s = parse_structure(text);
                if (auto v = validate(s))
                    throw InputError(path + ": invalid " + string(kind_name(s.kind())) + ": " + v->describe());
                return s;
            }
            catch (const ParseError & e) {
                throw InputError(path + ": " + e.what());
            }
        }

        auto load_mapping(const string & path, int domain_size, int image_size) -> Mapping
        {
            try {
                auto m = parse_mapping(read_file(path), image_size);
                if (m.domain_size() != domain_size)
                    throw InputError(path + ": map has " + std::to_string(m.domain_size()) + " entries, expected "
                            + std::to_string(domain_size));
                return m;
            }
            catch (const ParseError & e) {
                throw InputError(path + ": " + e.what());
            }
            catch (const std::invalid_argument & e) {
                throw InputError(path + ": " + e.what());
            }
        }

        auto verdict_line(const Verdict & v) -> string
        {
            return string("verdict ") + (v.qp ? "QP " : "NOT_QP ") + v.tag() + "\n";
        }

        auto default_jobs() -> int
        {
            if (auto env = std::getenv("QPROJ_JOBS")) {
                char * end = nullptr;
                long jobs = std::strtol(env, &end, 10);
                if (end != env && *end == '\0' && jobs >= 1)
                    return int(jobs);
            }
            return 1;
        }

        const std::map<string, GeometryMode> mode_names{
            {"literal", GeometryMode::Literal}, {"strict", GeometryMode::Strict}};
    }

    auto run_cli(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Quasi-projectivity of finite structures"};
        app.name("qproj");
        app.require_subcommand(1);

        string file, target_file, f_file, j_file, kind_text, verify_mode = "strict";
        GeometryMode mode = GeometryMode::Strict;
        int max_target = 0, jobs = default_jobs(), n = 0, n_max = 0;

        auto add_mode = [&] (CLI::App * sub) {
            sub->add_option("--mode", mode, "Geometry reading: literal or strict")
                ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
        };
        auto kind_check = CLI::Validator([] (string & name) {
                return parse_kind_name(name) ? string{} : "unknown kind '" + name + "'";
                }, "KIND");

        auto decide_cmd = app.add_subcommand("decide", "Decide with the characterisation");
        decide_cmd->add_option("file", file)->required();
        add_mode(decide_cmd);

        auto oracle_cmd = app.add_subcommand("oracle", "Decide by exhaustive search over targets");
        oracle_cmd->add_option("file", file)->required();
        oracle_cmd->add_option("--max-target-size", max_target)->check(CLI::PositiveNumber);
        oracle_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

        auto witness_cmd = app.add_subcommand("witness", "Print a verified counterexample triple");
        witness_cmd->add_option("file", file)->required();
        add_mode(witness_cmd);

        auto lift_cmd = app.add_subcommand("lift", "Find phi with j(phi(x)) = f(x)");
        lift_cmd->add_option("source", file)->required();
        lift_cmd->add_option("target", target_file)->required();
        lift_cmd->add_option("f", f_file)->required();
        lift_cmd->add_option("j", j_file)->required();
        add_mode(lift_cmd);

        auto enumerate_cmd = app.add_subcommand("enumerate", "Print one structure per isomorphism class");
        enumerate_cmd->add_option("--kind", kind_text)->required()->check(kind_check);
        enumerate_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);

        auto verify_cmd = app.add_subcommand("verify", "Compare decide with the oracle on every class");
        verify_cmd->add_option("--kind", kind_text)->required()->check(kind_check);
        verify_cmd->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);
        verify_cmd->add_option("--mode", verify_mode, "literal, strict or both")
            ->check(CLI::IsMember({"literal", "strict", "both"}, CLI::ignore_case));
        verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

        try {
            app.parse(vector<string>(args.rbegin(), args.rend()));
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? 0 : exit_code::usage;
        }

        try {
            if (decide_cmd->parsed()) {
                auto v = decide(load_structure(file), mode);
                out << verdict_line(v);
                return v.qp ? exit_code::qp : exit_code::not_qp;
            }

            if (oracle_cmd->parsed()) {
                auto s = load_structure(file);
                if (max_target > s.size()) {
                    err << "--max-target-size must not exceed n = " << s.size() << '\n';
                    return exit_code::usage;
                }
                auto report = oracle(s, OracleOptions{max_target, jobs, true});
                out << format_oracle_report(report);
                return report.qp ? exit_code::qp : exit_code::not_qp;
            }

            if (witness_cmd->parsed()) {
                auto s = load_structure(file);
                auto v = decide(s, mode);
                out << verdict_line(v);
                if (v.qp)
                    return exit_code::qp;
                auto w = witness(s, mode);
                if (auto problem = check_witness(s, w))
                    throw CertificateError("witness failed verification: " + *problem);
                out << '\n' << format_witness(w);
                return exit_code::not_qp;
            }

            if (lift_cmd->parsed()) {
                auto s = load_structure(file);
                auto t = load_structure(target_file);
                if (s.kind() != t.kind())
                    throw InputError("source and target kinds differ");
                auto f = load_mapping(f_file, s.size(), t.size());
                auto j = load_mapping(j_file, s.size(), t.size());
                if (! is_hom(s, t, f))
                    throw InputError("f is not a homomorphism");
                if (! is_hom(s, t, j) || ! j.is_surjective())
                    throw InputError("j is not an onto homomorphism");

                std::optional<Mapping> phi;
                if (decide(s, mode).qp)
                    phi = construct_lift(s, t, f, j, mode);
                else
                    phi = find_lift(s, t, f, j);
                if (! phi) {
                    out << "no-lift\n";
                    return exit_code::not_qp;
                }
                out << format_mapping(*phi);
                return exit_code::qp;
            }

            if (enumerate_cmd->parsed()) {
                auto classes = enumerate_class(*parse_kind_name(kind_text), n);
                for (std::size_t i = 0 ; i < classes.size() ; ++i)
                    out << (i ? "\n" : "") << format_structure(classes[i]);
                return exit_code::qp;
            }

            if (verify_cmd->parsed()) {
                auto kind = *parse_kind_name(kind_text);
                vector<GeometryMode> modes;
                if (verify_mode == "both")
                    modes = {GeometryMode::Literal, GeometryMode::Strict};
                else
                    modes = {mode_names.at(verify_mode)};

                bool clean = true;
                for (auto m : modes) {
                    auto report = verify_class(kind, n_max, m, jobs);
                    string prefix = modes.size() > 1 ? string(mode_name(m)) + " " : "";
                    if (report.mismatches.empty())
                        out << prefix << "OK " << report.classes << " classes\n";
                    for (auto & x : report.mismatches) {
                        clean = false;
                        out << prefix << "MISMATCH decide=" << (x.decided.qp ? "QP " : "NOT_QP ") << x.decided.tag()
                            << " oracle=" << (x.checked.qp ? "QP" : "NOT_QP") << '\n'
                            << format_structure(x.structure) << '\n';
                    }
                }
                return clean ? exit_code::qp : exit_code::not_qp;
            }
        }
        catch (const InputError & e) {
            err << e.what() << '\n';
            return exit_code::invalid_input;
        }
        catch (const BoundExceeded & e) {
            err << "bound exceeded: " << e.what() << '\n';
            return exit_code::bound_exceeded;
        }
        catch (const std::invalid_argument & e) {
            err << e.what() << '\n';
            return exit_code::invalid_input;
        }
        catch (const std::exception & e) {
            err << "internal error: " << e.what() << '\n';
            return exit_code::internal;
        }
        return exit_code::usage;
    }
}
