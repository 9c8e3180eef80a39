// grasslines: exact analysis of lines on codimension-2 linear sections of
// Grassmannians G(1,4) and G(1,5).
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid geometry,
//             3 non-member point, 4 usage or parse error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "grasslines/aut.hpp"
#include "grasslines/pencil_io.hpp"
#include "grasslines/verify.hpp"

namespace gl = grasslines;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitGeometry = 2;
constexpr int kExitNonMember = 3;
constexpr int kExitUsage = 4;

uint64_t default_seed() {
    if (const char* env = std::getenv("GRASS_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw gl::error("GRASS_SEED is not an unsigned integer");
        }
    }
    return 20260810ULL;
}

gl::AntisymPencil load_space(const std::string& space, const std::string& pencil_path) {
    if (!pencil_path.empty()) return gl::pencil_from_file(pencil_path);
    if (space == "g14") return gl::normal_form_odd();
    if (space == "g15") return gl::normal_form_even();
    throw gl::error("choose --space g14|g15 or --pencil FILE");
}

gl::Vec parse_coords(const std::string& text) {
    gl::Vec out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw gl::error("empty coordinate in point literal");
        out.push_back(gl::rat_parse(cur));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            cur += ch;
    }
    flush();
    return out;
}

gl::ProjLine parse_point(const std::string& text, size_t ambient_n) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw gl::error("point literal must be 'p;q' with comma-separated rationals");
    gl::Vec p = parse_coords(text.substr(0, semi));
    gl::Vec q = parse_coords(text.substr(semi + 1));
    if (p.size() != ambient_n + 1 || q.size() != ambient_n + 1)
        throw gl::error("point coordinates must have length " + std::to_string(ambient_n + 1));
    return gl::ProjLine::span_of(p, q);
}

int cmd_analyze(const std::string& space, const std::string& pencil_path,
                const std::string& format) {
    gl::AntisymPencil pencil = load_space(space, pencil_path);
    gl::GeneralityCert cert = gl::generality_check(pencil);
    if (!cert.general) {
        std::cout << "pencil is NOT general: " << cert.violation << "\n";
        return kExitGeometry;
    }
    if (format == "json") {
        std::string parity = pencil.parity == gl::Parity::even_section ? "even" : "odd";
        std::cout << "{\n  \"parity\": \"" << parity << "\",\n  \"general\": true";
    } else {
        std::cout << "pencil is general ("
                  << (pencil.parity == gl::Parity::even_section ? "even" : "odd")
                  << " section of G(1," << pencil.ambient_n() << "))\n";
    }
    if (pencil.parity == gl::Parity::even_section) {
        if (cert.irrational_roots) {
            std::cout << (format == "json" ? ",\n  \"irrational_roots\": \"" : "\n");
            std::cout << (format == "json"
                              ? cert.residual.str("lambda", "mu") + "\"\n}\n"
                              : "pfaffian roots are not all rational; residual factor " +
                                    cert.residual.str("lambda", "mu") +
                                    "\nderived geometry unavailable over Q\n");
            return kExitOk;
        }
        auto exc = gl::exceptional_lines(pencil);
        if (format == "json") {
            std::cout << ",\n  \"degenerate_members\": [";
            for (size_t i = 0; i < 3; ++i) {
                std::cout << (i ? ", " : "") << "{\"param\": \"(" << gl::rat_str(exc[i].param.coords()[0])
                          << ":" << gl::rat_str(exc[i].param.coords()[1]) << ")\"}";
            }
            std::cout << "]\n}\n";
        } else {
            std::cout << "degenerate members and exceptional lines:\n";
            for (size_t i = 0; i < 3; ++i)
                std::cout << "  l" << i + 1 << " at (" << gl::rat_str(exc[i].param.coords()[0])
                          << ":" << gl::rat_str(exc[i].param.coords()[1]) << ")  kernel "
                          << exc[i].kernel.str() << "\n";
            gl::SectionSpace s(pencil);
            for (size_t i = 0; i < 3; ++i)
                std::cout << "  V" << i + 1 << " = " << s.v_planes()[i].str() << "\n";
        }
    } else {
        gl::SectionSpace s(pencil);
        const auto& c = s.center();
        if (format == "json") {
            std::cout << ",\n  \"center_curve\": [";
            for (size_t k = 0; k < c.coords.size(); ++k)
                std::cout << (k ? ", " : "") << "\"" << c.coords[k].str("lambda", "mu") << "\"";
            std::cout << "]\n}\n";
        } else {
            std::cout << "center curve c(lambda:mu) = (";
            for (size_t k = 0; k < c.coords.size(); ++k)
                std::cout << (k ? " : " : "") << c.coords[k].str("lambda", "mu");
            std::cout << ")\n";
            std::cout << "center plane P = " << s.center_plane().str() << "\n";
            std::cout << "conic form on P (plane coords): " << s.conic_form().m.str() << "\n";
        }
    }
    return kExitOk;
}

int cmd_zx(const std::string& space, const std::string& pencil_path, const std::string& point,
           const std::string& orbit, uint64_t seed, const std::string& format) {
    gl::AntisymPencil pencil = load_space(space, pencil_path);
    gl::SectionSpace s(pencil);
    gl::SectionPoint x = [&] {
        if (!point.empty()) {
            gl::ProjLine l = parse_point(point, s.ambient_n());
            return gl::make_section_point(s, l);
        }
        if (orbit.empty()) throw gl::error("need --point or --orbit");
        gl::Rng rng(seed);
        return gl::sample_orbit(s, gl::orbit_parse(orbit), rng);
    }();
    gl::Decomposition dec = gl::decompose(s, x);
    if (format == "json") {
        std::cout << gl::zx_report_json_text(dec);
    } else {
        std::cout << "line: " << x.line.str() << "\n";
        std::cout << "orbit: " << gl::orbit_str(dec.report.orbit) << "\n";
        std::cout << "components: " << gl::component_table(dec.report.components) << "\n";
        std::cout << "total class: (" << dec.report.total_class[0] << ","
                  << dec.report.total_class[1] << ")\n";
        if (dec.report.quadric_rank)
            std::cout << "elimination quadric rank: " << dec.report.quadric_rank << "\n";
        if (dec.report.vertex)
            std::cout << "cone vertex (frame coords): " << gl::vec_str(*dec.report.vertex)
                      << "\n";
        if (!dec.report.signature.empty())
            std::cout << "signature: " << dec.report.signature << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, long trials, uint64_t seed, const std::string& format) {
    auto results = gl::run_suites(suite, trials, seed);
    bool pass = true;
    for (const auto& r : results) pass = pass && r.all_pass();
    if (format == "json")
        std::cout << gl::report_json(results);
    else
        std::cout << gl::report_markdown(results);
    return pass ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geometry of lines on codimension-2 Grassmannian sections"};
    app.set_version_flag("--version", std::string("grasslines ") + GRASSLINES_VERSION);
    app.require_subcommand(1);

    std::string space, pencil_path, format = "md";
    std::string point, orbit, suite = "all";
    long trials = 500;
    uint64_t seed = 0;
    bool seed_set = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--space", space, "builtin section: g14 or g15");
        cmd->add_option("--pencil", pencil_path, "pencil JSON file");
        cmd->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "generality and derived geometry");
    add_common(analyze);

    CLI::App* zx = app.add_subcommand("zx", "decompose the variety of lines through a point");
    add_common(zx);
    zx->add_option("--point", point, "member line as 'p;q' coordinate lists");
    zx->add_option("--orbit", orbit, "sample a representative: o1..o4");
    zx->add_option("--seed", seed, "rng seed")->each([&](const std::string&) { seed_set = true; });

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "thm1|thm2|orbits|lemma25|corollary|all");
    verify->add_option("--trials", trials, "randomized trial count");
    verify->add_option("--seed", seed, "rng seed")->each([&](const std::string&) { seed_set = true; });
    verify->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!seed_set) seed = default_seed();
        if (app.got_subcommand("analyze")) return cmd_analyze(space, pencil_path, format);
        if (app.got_subcommand("zx"))
            return cmd_zx(space, pencil_path, point, orbit, seed, format);
        if (app.got_subcommand("verify")) return cmd_verify(suite, trials, seed, format);
        return kExitUsage;
    } catch (const gl::non_member& e) {
        std::cerr << "error: " << e.what() << " (pairings " << e.pairing_a << ", "
                  << e.pairing_b << ")\n";
        return kExitNonMember;
    } catch (const gl::not_general& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGeometry;
    } catch (const gl::invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
