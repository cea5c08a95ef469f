// Command-line front end: generators, detectors, certificate checks and the
// exhaustive search. Files use the plain-text formats of <ramsey/io.hpp>;
// "-" means stdin/stdout.
//
// Exit codes: 0 found / SAT / valid, 1 none / UNSAT / invalid,
// 2 usage or input error, 3 search budget exhausted.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <ramsey/certify.hpp>
#include <ramsey/construct.hpp>
#include <ramsey/detect.hpp>
#include <ramsey/family.hpp>
#include <ramsey/io.hpp>
#include <ramsey/search.hpp>

using namespace ramsey;

namespace
{

constexpr int kFound = 0;
constexpr int kNone = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

std::string read_all(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_all(const std::string& path, const std::string& text)
{
    if (path == "-")
    {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
}

std::vector<int> split_ints(const std::string& text, char sep)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, sep))
    {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw InputError("bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

// path:M, power:M,T, file:PATH
OrderedTripleSystem pattern_spec(const std::string& spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw InputError("pattern spec needs a kind: " + spec);
    const std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
    if (kind == "path")
        return monotone_path(std::stoi(rest));
    if (kind == "power")
    {
        const auto mt = split_ints(rest, ',');
        if (mt.size() != 2)
            throw InputError("power needs M,T");
        return power_path(mt[0], mt[1]);
    }
    if (kind == "file")
        return pattern_from_text(read_all(rest)).pattern;
    throw InputError("unknown pattern kind " + kind);
}

BlueSpec blue_spec(const std::string& spec)
{
    if (spec.rfind("jumps:", 0) == 0)
        return JumpsSelector{std::stoi(spec.substr(6))};
    return pattern_spec(spec);
}

std::string vertex_list(const std::vector<int>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

std::string table_text(int N, const std::function<int(int, int)>& value)
{
    std::ostringstream out;
    for (int u = 1; u <= N; ++u)
        for (int v = u + 1; v <= N; ++v)
            out << u << ' ' << v << ' ' << value(u, v) << '\n';
    return out.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ordered 3-uniform hypergraph Ramsey toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ramsey 1.0");

    std::string input = "-", output = "-";
    int workers = 1;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a pattern or pair coloring");
    std::string gen_kind;
    std::vector<std::string> gen_args;
    gen->add_option("kind", gen_kind, "path|power|imin|pentagon|gf16|schur|paley|product")
        ->required()
        ->check(CLI::IsMember({"path", "power", "imin", "pentagon", "gf16", "schur", "paley", "product"}));
    gen->add_option("args", gen_args, "Kind arguments: M | M T | N | - | - | 1,4;2,3 | Q | FILE1 FILE2");
    gen->add_option("-o,--output", output, "Output file");

    // lift
    auto* lift_cmd = app.add_subcommand("lift", "Lift a pair coloring to a triple coloring");
    lift_cmd->add_option("-i,--input", input, "Pair coloring file");
    lift_cmd->add_option("-o,--output", output, "Output file");

    // detect
    auto* detect = app.add_subcommand("detect", "Look for a structure; exit 0 if found, 1 if not");
    std::string detect_kind, detect_pattern;
    int detect_n = 1, detect_m = 3;
    detect->add_option("kind", detect_kind, "redpath|pattern|jumps|clique")
        ->required()
        ->check(CLI::IsMember({"redpath", "pattern", "jumps", "clique"}));
    detect->add_option("-i,--input", input, "Triple coloring (pair coloring for clique)");
    detect->add_option("-p,--pattern", detect_pattern, "Pattern spec for 'pattern': path:M, power:M,T or file:PATH");
    detect->add_option("-n", detect_n, "Jump count for 'jumps', minimum red path edges for 'redpath'");
    detect->add_option("-m", detect_m, "Clique size for 'clique'");
    auto* detect_workers = detect->add_option("-w,--workers", workers, "Worker threads (default: $RAMSEY_WORKERS or 1)")
                               ->check(CLI::PositiveNumber);
    detect->add_option("-o,--output", output, "Witness file");

    // table
    auto* table = app.add_subcommand("table", "Print alpha, beta or profile tables");
    std::string table_kind;
    table->add_option("kind", table_kind, "alpha|beta|profiles")->required()->check(CLI::IsMember({"alpha", "beta", "profiles"}));
    table->add_option("-i,--input", input, "Triple coloring file");

    // certify
    auto* certify = app.add_subcommand("certify", "Certificate extraction and checks");
    std::string certify_kind, certify_witness;
    int certify_n = 1, certify_u = 0, certify_v = 0;
    certify->add_option("kind", certify_kind, "ghtriangle|witness|profileprop|downsets")
        ->required()
        ->check(CLI::IsMember({"ghtriangle", "witness", "profileprop", "downsets"}));
    certify->add_option("-i,--input", input, "Pair coloring (ghtriangle) or triple coloring");
    certify->add_option("--witness", certify_witness, "Jump witness file for ghtriangle");
    certify->add_option("-n", certify_n, "Parameter n");
    certify->add_option("-u", certify_u, "Chain end u");
    certify->add_option("-v", certify_v, "Chain end v");
    certify->add_option("-o,--output", output, "Output file");

    // search
    auto* search = app.add_subcommand("search", "Exhaustive avoidance search");
    std::string red = "path:4", blue = "path:4", certificate_path;
    int search_n = 0, nmax = 0;
    std::uint64_t budget = SearchOptions{}.budget;
    search->add_option("--red", red, "Red pattern: path:M, power:M,T or file:PATH");
    search->add_option("--blue", blue, "Blue pattern, or jumps:N for the jump family");
    auto* n_opt = search->add_option("--n", search_n, "Host size N")->check(CLI::NonNegativeNumber);
    auto* nmax_opt = search->add_option("--nmax", nmax, "Bracket N = 1..NMAX")->check(CLI::Range(3, 64));
    n_opt->excludes(nmax_opt);
    search->add_option("--budget", budget, "Node budget per level");
    auto* search_workers = search->add_option("-w,--workers", workers, "Worker threads (default: $RAMSEY_WORKERS or 1)")
                               ->check(CLI::PositiveNumber);
    search->add_option("-o,--output", output, "Witness coloring file (SAT only)");
    search->add_option("--certificate", certificate_path, "Certificate file");

    // verify
    auto* verify = app.add_subcommand("verify", "Validate files");
    std::string verify_kind, verify_format = "triples";
    verify->add_option("kind", verify_kind, "member|avoid|roundtrip")->required()->check(CLI::IsMember({"member", "avoid", "roundtrip"}));
    verify->add_option("-i,--input", input, "Input file");
    verify->add_option("--format", verify_format, "roundtrip format")->check(CLI::IsMember({"pairs", "triples", "pattern", "witness"}));
    verify->add_option("--red", red, "Red pattern for avoid");
    verify->add_option("--blue", blue, "Blue pattern for avoid");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    if (const char* env = std::getenv("RAMSEY_WORKERS"); env && !*detect_workers && !*search_workers)
    {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (*env == '\0' || *end != '\0' || value < 1 || value > 1024)
        {
            std::cerr << "RAMSEY_WORKERS must be a positive integer\n";
            return kUsage;
        }
        workers = static_cast<int>(value);
    }

    try
    {
        if (*gen)
        {
            auto arg = [&](std::size_t i) {
                if (i >= gen_args.size())
                    throw InputError("gen " + gen_kind + " needs more arguments");
                return gen_args[i];
            };
            std::string text;
            if (gen_kind == "path")
                text = to_text(PatternFile{monotone_path(std::stoi(arg(0))), std::nullopt});
            else if (gen_kind == "power")
                text = to_text(PatternFile{power_path(std::stoi(arg(0)), std::stoi(arg(1))), std::nullopt});
            else if (gen_kind == "imin")
            {
                const auto member = jump_min(std::stoi(arg(0)));
                text = to_text(PatternFile{member.pattern, member.jumps.positions()});
            }
            else if (gen_kind == "pentagon")
                text = to_text(pentagon_coloring());
            else if (gen_kind == "gf16")
                text = to_text(gf16_coloring());
            else if (gen_kind == "paley")
                text = to_text(paley_coloring(std::stoi(arg(0))));
            else if (gen_kind == "schur")
            {
                std::vector<std::vector<int>> partition;
                std::stringstream ss(arg(0));
                std::string part;
                while (std::getline(ss, part, ';'))
                    partition.push_back(split_ints(part, ','));
                text = to_text(schur_coloring(partition));
            }
            else
                text = to_text(product_coloring(pair_coloring_from_text(read_all(arg(0))),
                                                pair_coloring_from_text(read_all(arg(1)))));
            write_all(output, text);
            return kFound;
        }

        if (*lift_cmd)
        {
            write_all(output, to_text(lift(pair_coloring_from_text(read_all(input)))));
            return kFound;
        }

        if (*detect)
        {
            const auto text = read_all(input);
            if (detect_kind == "clique")
            {
                const auto clique = has_mono_clique(pair_coloring_from_text(text), detect_m, workers);
                if (!clique)
                {
                    std::cerr << "no monochromatic K" << detect_m << "\n";
                    return kNone;
                }
                write_all(output, to_text(Witness{*clique, std::nullopt, std::nullopt}));
                return kFound;
            }
            const auto c = triple_coloring_from_text(text);
            if (detect_kind == "redpath")
            {
                const auto path = longest_red_path(c);
                std::cerr << "max_alpha " << path.max_alpha << "\n";
                write_all(output, to_text(Witness{path.vertices, std::nullopt, std::nullopt}));
                return path.max_alpha >= detect_n ? kFound : kNone;
            }
            if (detect_kind == "pattern")
            {
                if (detect_pattern.empty())
                    throw InputError("detect pattern needs --pattern");
                const auto phi = find_blue_embedding(c, pattern_spec(detect_pattern));
                if (!phi)
                {
                    std::cerr << "no blue copy\n";
                    return kNone;
                }
                write_all(output, to_text(Witness{phi->vertices, std::nullopt, std::nullopt}));
                return kFound;
            }
            const auto w = find_blue_jump_member(c, detect_n);
            if (!w)
            {
                std::cerr << "no blue member with " << detect_n << " jumps\n";
                return kNone;
            }
            write_all(output, to_text(Witness{w->vertices, w->jumps.positions(), std::nullopt}));
            return kFound;
        }

        if (*table)
        {
            const auto c = triple_coloring_from_text(read_all(input));
            const BetaTable beta(c);
            if (table_kind == "alpha")
                std::cout << table_text(c.vertex_count(), [&](int u, int v) { return beta.alpha()(u, v); });
            else if (table_kind == "beta")
                std::cout << table_text(c.vertex_count(), [&](int u, int v) { return beta(u, v); });
            else
            {
                const auto profiles = profile_table(beta);
                for (int v = 1; v <= c.vertex_count(); ++v)
                    std::cout << v << " [" << vertex_list(profiles[static_cast<std::size_t>(v)].max_b) << "]\n";
            }
            return kFound;
        }

        if (*certify)
        {
            if (certify_kind == "downsets")
            {
                write_all(output, std::to_string(count_downsets(certify_n)) + "\n");
                return kFound;
            }
            if (certify_kind == "ghtriangle")
            {
                const auto chi = pair_coloring_from_text(read_all(input));
                const auto w = witness_from_text(read_all(certify_witness));
                if (!w.jumps)
                    throw InputError("witness needs a jumps line");
                const JumpWitness witness{w.vertices, JumpSpec(static_cast<int>(w.vertices.size()), *w.jumps)};
                for (int v : w.vertices)
                    if (v > chi.vertex_count())
                        throw InputError("witness vertex " + std::to_string(v) + " is outside the coloring");
                const auto [x, y, z] = gh_triangle_finder(witness.jumps, pull_back(chi, witness));
                const auto host = [&](int p) { return w.vertices[static_cast<std::size_t>(p - 1)]; };
                write_all(output, "triangle " + vertex_list({host(x), host(y), host(z)}) + "\ncolor " +
                                      std::to_string(chi(host(x), host(y))) + "\n");
                return kFound;
            }
            const auto c = triple_coloring_from_text(read_all(input));
            if (certify_kind == "witness")
            {
                const BetaTable beta(c);
                if (certify_u < 1 || certify_v <= certify_u || certify_v > c.vertex_count())
                    throw InputError("need 1 <= u < v <= N");
                const auto chain = beta.chain(certify_u, certify_v);
                if (!chain)
                {
                    std::cerr << "beta(" << certify_u << "," << certify_v << ") = 1, no chain\n";
                    return kNone;
                }
                const auto phi = extract_blue_jump_witness(c, *chain);
                std::vector<int> jumps;
                for (int i = 1; i < chain->ell(); ++i)
                    jumps.push_back(2 * i);
                write_all(output, to_text(Witness{phi.vertices, jumps, chain->block_values}));
                return kFound;
            }
            const auto report = verify_profile_property(c, certify_n);
            std::ostringstream out;
            out << "n " << report.n << "\nred_path " << report.red_path << "\nblue_jump_min " << report.blue_jump_min
                << "\nmax_alpha " << report.max_alpha << "\nmax_beta " << report.max_beta << "\ngroups "
                << report.groups.size() << "\ndownset_bound " << report.downset_bound << "\n";
            if (report.triangle)
                out << "triangle " << vertex_list({(*report.triangle)[0], (*report.triangle)[1], (*report.triangle)[2]})
                    << "\n";
            write_all(output, out.str());
            return report.clean() ? kFound : kNone;
        }

        if (*search)
        {
            const auto red_pattern = pattern_spec(red);
            const auto blue_pattern = blue_spec(blue);
            SearchOptions options;
            options.budget = budget;
            options.workers = workers;
            if (*nmax_opt)
            {
                const auto result = bracket(red_pattern, blue_pattern, nmax, options);
                std::string certs;
                for (const auto& level : result.levels)
                {
                    std::cout << "N " << level.N << ' ' << to_string(level.result.status)
                              << (level.implied ? " (implied)" : "") << '\n';
                    if (!level.implied)
                        certs += certificate_text({level.N, red_pattern, blue_pattern}, level.result);
                }
                std::cout << "largest_sat " << result.largest_sat << '\n';
                if (!certificate_path.empty())
                    write_all(certificate_path, certs);
                if (output != "-" && result.largest_sat > 0)
                    for (const auto& level : result.levels)
                        if (level.N == result.largest_sat && level.result.witness)
                            write_all(output, to_text(*level.result.witness));
                return result.status == Status::Inconclusive ? kInconclusive : result.status == Status::Sat ? kFound : kNone;
            }
            if (!*n_opt)
                throw InputError("search needs --n or --nmax");
            const AvoidanceProblem problem{search_n, red_pattern, blue_pattern};
            const auto result = decide(problem, options);
            const auto cert = certificate_text(problem, result);
            if (!certificate_path.empty())
                write_all(certificate_path, cert);
            if (result.witness)
                write_all(output, to_text(*result.witness));
            if (output != "-" || !result.witness)
                std::cerr << cert;
            return result.status == Status::Sat ? kFound : result.status == Status::Unsat ? kNone : kInconclusive;
        }

        if (*verify)
        {
            const auto text = read_all(input);
            if (verify_kind == "member")
            {
                const auto p = pattern_from_text(text);
                if (!p.jumps)
                    throw InputError("member check needs a jumps line");
                const auto report = validate_jump_member(p.pattern, *p.jumps);
                if (report.valid)
                {
                    std::cout << "valid\n";
                    return kFound;
                }
                std::cout << "invalid: "
                          << (report.missing_edge ? "missing edge " + to_string(*report.missing_edge) : report.violation)
                          << '\n';
                return kNone;
            }
            if (verify_kind == "avoid")
            {
                const auto c = triple_coloring_from_text(text);
                const bool ok = avoids({c.vertex_count(), pattern_spec(red), blue_spec(blue)}, c);
                std::cout << (ok ? "avoids\n" : "contains\n");
                return ok ? kFound : kNone;
            }
            std::string again;
            if (verify_format == "pairs")
                again = to_text(pair_coloring_from_text(text));
            else if (verify_format == "triples")
                again = to_text(triple_coloring_from_text(text));
            else if (verify_format == "pattern")
                again = to_text(pattern_from_text(text));
            else
                again = to_text(witness_from_text(text));
            std::cout << again;
            return again == text ? kFound : kNone;
        }
    }
    catch (const FormatError& e)
    {
        std::cerr << "format error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const InputError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "error: bad number (" << e.what() << ")\n";
        return kUsage;
    }
    catch (const std::out_of_range& e)
    {
        std::cerr << "error: number out of range\n";
        return kUsage;
    }
    catch (const CertificationError& e)
    {
        std::cerr << "certification failed: " << e.what() << '\n';
        return kNone;
    }
    return kUsage;
}
