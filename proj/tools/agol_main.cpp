// agol: command line front end for the splitting-cycle library.
//
// Word arguments list triples "p,p',q;..." with the leftmost triple acting
// last as a map; --reverse accepts the opposite order. Exit codes: 0 on
// success (and, for verify, all checks passing), 1 on any computation or
// verification failure, 2 on usage errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/program_options.hpp>
#include <nlohmann/json.hpp>

#include "agol/cfrac.hpp"
#include "agol/cycles.hpp"
#include "agol/errors.hpp"
#include "agol/matrices.hpp"
#include "agol/quad.hpp"
#include "agol/track_data.hpp"
#include "agol/tracksim.hpp"
#include "agol/words.hpp"

namespace po = boost::program_options;
using nlohmann::json;
using namespace agol;

namespace {

struct UsageFailure {
    std::string message;
};

const char* kUsage =
    "usage: agol <subcommand> [options] [arguments]\n"
    "\n"
    "subcommands:\n"
    "  dilatation <word>            exact dilatation with minimal polynomial\n"
    "  eigenvector <word>           normalized eigenvector, exact entries\n"
    "  cycle <word>                 closed-form cycle descriptor (needs --surface)\n"
    "  simulate <word>              run the splitting simulator (needs --surface)\n"
    "  conjugate <word1> <word2>    decide conjugacy with a certificate\n"
    "  canonical <word>             canonical form under rotation and flip\n"
    "  verify <word>                closed form against simulator (--surface, default both)\n"
    "  batch <file>                 invariant table for a file of words, one per line\n"
    "\n"
    "words are triples \"p,p',q\" joined by ';', leftmost triple acting last\n";

ParamWord read_word(const std::string& text, bool reverse) {
    ParamWord w = ParamWord::parse(text);
    if (reverse) std::reverse(w.blocks.begin(), w.blocks.end());
    validate(w);
    return w;
}

Surface parse_surface(const std::string& name) {
    if (name == "torus") return Surface::Torus;
    if (name == "sphere") return Surface::Sphere;
    throw UsageFailure{"surface must be torus or sphere, got \"" + name + "\""};
}

const char* surface_name(Surface s) { return s == Surface::Torus ? "torus" : "sphere"; }

char type_char(SplitType t) {
    switch (t) {
        case SplitType::L: return 'L';
        case SplitType::R: return 'R';
        default: return 'M';
    }
}

json quad_json(const QuadExt& x) { return json::parse(x.to_json()); }

json word_json(const ParamWord& w) {
    json a = json::array();
    for (const auto& b : w.blocks) a.push_back({b[0], b[1], b[2]});
    return a;
}

json vec_json(const QuadVec3& v) {
    return json::array({quad_json(v[0]), quad_json(v[1]), quad_json(v[2])});
}

// Primitive integer polynomial with positive leading coefficient vanishing
// at x: quadratic for an irrational, linear for a rational.
std::string minimal_polynomial(const QuadExt& x) {
    std::vector<mpz_class> coeff;  // descending degree
    if (x.is_rational()) {
        coeff = {x.c(), -x.a()};
    } else {
        coeff = {x.c() * x.c(), mpz_class(-2 * x.a() * x.c()),
                 mpz_class(x.a() * x.a() - x.b() * x.b() * x.d())};
        mpz_class g = gcd(gcd(coeff[0], coeff[1]), coeff[2]);
        for (auto& c : coeff) c /= g;
    }
    std::ostringstream out;
    long deg = static_cast<long>(coeff.size()) - 1;
    bool first = true;
    for (std::size_t i = 0; i < coeff.size(); ++i, --deg) {
        const mpz_class& c = coeff[i];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || deg == 0) out << mag.get_str();
        if (deg >= 1) {
            if (mag != 1) out << " ";
            out << "t";
            if (deg >= 2) out << "^" << deg;
        }
    }
    return out.str();
}

struct Options {
    bool json = false;
    bool reverse = false;
    bool trace = false;
    bool snapshots = false;
    std::optional<std::string> surface;
    std::optional<long> max_steps;
    std::vector<std::string> args;
};

const std::string& arg(const Options& opt, std::size_t i, const char* what) {
    if (i >= opt.args.size()) throw UsageFailure{std::string("missing argument: ") + what};
    return opt.args[i];
}

void require_arg_count(const Options& opt, std::size_t n) {
    if (opt.args.size() > n) throw UsageFailure{"unexpected argument: " + opt.args[n]};
}

int cmd_dilatation(const Options& opt) {
    ParamWord w = read_word(arg(opt, 0, "word"), opt.reverse);
    require_arg_count(opt, 1);
    RectangleData rect = rectangle_data(w);
    if (opt.json) {
        json j{{"word", word_json(w)},
               {"dilatation", quad_json(rect.lambda)},
               {"dilatation_text", rect.lambda.to_string()},
               {"minimal_polynomial", minimal_polynomial(rect.lambda)},
               {"decimal_approx", rect.lambda.decimal()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "word: " << w.to_string() << "\n"
                  << "dilatation: " << rect.lambda.to_string() << "\n"
                  << "minimal polynomial: " << minimal_polynomial(rect.lambda) << "\n"
                  << "decimal: " << rect.lambda.decimal() << " (approx)\n";
    }
    return 0;
}

int cmd_eigenvector(const Options& opt) {
    ParamWord w = read_word(arg(opt, 0, "word"), opt.reverse);
    require_arg_count(opt, 1);
    QuadVec3 v = normalized_eigenvector(w);
    if (opt.json) {
        json j{{"word", word_json(w)}, {"eigenvector", vec_json(v)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "word: " << w.to_string() << "\n";
        const char* label[3] = {"s", "h0", "1-s"};
        for (int i = 0; i < 3; ++i)
            std::cout << label[i] << ": " << v[i].to_string() << " = " << v[i].decimal()
                      << " (approx)\n";
    }
    return 0;
}

json descriptor_json(const CycleDescriptor& d) {
    return json{{"surface", surface_name(d.surface)}, {"word", word_json(d.word)},
                {"length", d.length},                 {"total", d.total},
                {"split_word", d.split_word.to_string()}, {"dilatation", quad_json(d.dilatation)},
                {"eigenvector", vec_json(d.eigenvector)}};
}

int cmd_cycle(const Options& opt) {
    if (!opt.surface) throw UsageFailure{"cycle needs --surface torus|sphere"};
    Surface surf = parse_surface(*opt.surface);
    ParamWord w = read_word(arg(opt, 0, "word"), opt.reverse);
    require_arg_count(opt, 1);
    CycleDescriptor d = cycle(surf, w);
    if (opt.json) {
        std::cout << descriptor_json(d).dump() << "\n";
    } else {
        std::cout << "surface: " << surface_name(d.surface) << "\n"
                  << "word: " << d.word.to_string() << "\n"
                  << "length: " << d.length << "\n"
                  << "total splitting number: " << d.total << "\n"
                  << "split word: " << d.split_word.to_string() << "\n"
                  << "dilatation: " << d.dilatation.to_string() << "\n"
                  << "eigenvector: (" << d.eigenvector[0].to_string() << ", "
                  << d.eigenvector[1].to_string() << ", " << d.eigenvector[2].to_string()
                  << ")\n"
                  << "start track: " << d.start_track_label << "\n";
    }
    return 0;
}

json snapshot_json(const RibbonTrack& t) {
    json switches = json::array();
    for (const auto& sw : t.switches) switches.push_back({sw[0], sw[1], sw[2]});
    json weights = json::array();
    for (const auto& x : t.weights) weights.push_back(quad_json(x));
    return json{{"switches", switches}, {"weights", weights}};
}

int cmd_simulate(const Options& opt) {
    if (!opt.surface) throw UsageFailure{"simulate needs --surface torus|sphere"};
    Surface surf = parse_surface(*opt.surface);
    ParamWord w = read_word(arg(opt, 0, "word"), opt.reverse);
    require_arg_count(opt, 1);

    CycleDescriptor d = cycle(surf, w);
    long max_steps = opt.max_steps.value_or(4 * d.length);
    RibbonTrack start = build_start_track(surf, d.eigenvector);
    CycleInfo found = find_cycle(start, max_steps);
    RunResult res = run(start, found.m);

    long total = 0;
    for (const auto& rec : res.steps) total += rec.splitting_number;
    std::string word_text;
    for (const auto& rec : res.steps) word_text += type_char(rec.type);

    if (opt.trace) {
        for (std::size_t i = 0; i < res.steps.size(); ++i) {
            const StepRecord& rec = res.steps[i];
            json line{{"step", rec.step_index},
                      {"type", std::string(1, type_char(rec.type))},
                      {"number", rec.splitting_number},
                      {"max_weight", quad_json(rec.max_weight)}};
            if (opt.snapshots) line["snapshot"] = snapshot_json(*res.snapshots[i]);
            std::cout << line.dump() << "\n";
        }
    } else if (!opt.json) {
        for (const auto& rec : res.steps)
            std::cout << "step " << rec.step_index << ": " << type_char(rec.type) << " number "
                      << rec.splitting_number << " max " << rec.max_weight.to_string() << "\n";
    }

    if (opt.json || opt.trace) {
        json j{{"surface", surface_name(surf)}, {"word", word_json(w)},   {"m", found.m},
               {"scale", quad_json(found.scale)}, {"split_word", word_text}, {"total", total}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "cycle: m = " << found.m << ", scale = " << found.scale.to_string()
                  << ", split word " << word_text << ", total " << total << "\n";
    }
    return 0;
}

std::vector<std::array<long, 2>> profile(const ParamWord& w) {
    std::vector<std::array<long, 2>> out;
    for (const auto& b : w.blocks) out.push_back({b[0] + b[1], b[2]});
    return out;
}

int cmd_conjugate(const Options& opt) {
    ParamWord a = read_word(arg(opt, 0, "word1"), opt.reverse);
    ParamWord b = read_word(arg(opt, 1, "word2"), opt.reverse);
    require_arg_count(opt, 2);

    bool equivalent = are_equivalent(a, b);
    std::optional<std::pair<long, bool>> cert;
    if (equivalent) {
        ParamWord r = a;
        ParamWord fb = flip(b);
        for (std::size_t k = 0; k < a.size(); ++k, r = shift(r)) {
            if (r == b) { cert = {static_cast<long>(k), false}; break; }
            if (r == fb) { cert = {static_cast<long>(k), true}; break; }
        }
    }

    // For inequivalent words whose (p+p', q) profiles agree up to rotation,
    // the split ratios are the separating invariant: for every aligned
    // rotation, s differs from both s' and 1-s'.
    std::optional<std::pair<QuadExt, QuadExt>> ratios;
    if (!equivalent && a.size() == b.size()) {
        auto pb = profile(b);
        ParamWord r = a;
        for (std::size_t k = 0; k < a.size(); ++k, r = shift(r)) {
            if (profile(r) == pb) {
                ratios = {split_ratio(r), split_ratio(b)};
                break;
            }
        }
    }

    if (opt.json) {
        json j{{"equivalent", equivalent}};
        if (cert) j["certificate"] = {{"shift", cert->first}, {"flip", cert->second}};
        if (ratios)
            j["distinguishing"] = {{"s1", quad_json(ratios->first)},
                                   {"s2", quad_json(ratios->second)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "equivalent: " << (equivalent ? "yes" : "no") << "\n";
        if (cert)
            std::cout << "certificate: shift " << cert->first << (cert->second ? ", flip" : "")
                      << "\n";
        if (ratios) {
            std::cout << "profiles agree up to rotation; split ratios separate:\n"
                      << "  s1 = " << ratios->first.to_string()
                      << ", s2 = " << ratios->second.to_string() << "\n"
                      << "  s1 != s2 and s1 + s2 != 1\n";
        }
    }
    return 0;
}

int cmd_canonical(const Options& opt) {
    ParamWord w = read_word(arg(opt, 0, "word"), opt.reverse);
    require_arg_count(opt, 1);
    ParamWord c = canonical_form(w);
    if (opt.json) {
        json j{{"word", word_json(w)},
               {"canonical", word_json(c)},
               {"canonical_text", c.to_string()},
               {"symmetric", is_symmetric(w)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << c.to_string() << "\n";
    }
    return 0;
}

struct Check {
    std::string name;
    bool ok;
};

std::vector<Check> verify_surface(Surface surf, const ParamWord& w) {
    std::vector<Check> checks;
    CycleDescriptor d = cycle(surf, w);
    RibbonTrack start = build_start_track(surf, d.eigenvector);
    RunResult res = run(start, d.length);

    SplitWord realized;
    long total = 0;
    for (const auto& rec : res.steps) {
        realized.steps.push_back(rec.type);
        total += rec.splitting_number;
    }
    checks.push_back({"split word", realized == d.split_word});
    checks.push_back({"total splitting number", total == d.total});

    auto full_scale = iso_measured(start, *res.snapshots.back());
    checks.push_back(
        {"rescale after one period", full_scale && *full_scale * d.dilatation == QuadExt(1)});

    CycleInfo found = find_cycle(start, d.length);
    PrimitiveCycle predicted = primitive_cycle(surf, w);
    checks.push_back({"primitive return", found.m == predicted.m && found.scale == predicted.scale});
    return checks;
}

int cmd_verify(const Options& opt) {
    ParamWord w = read_word(arg(opt, 0, "word"), opt.reverse);
    require_arg_count(opt, 1);
    std::vector<Surface> surfaces;
    if (!opt.surface || *opt.surface == "both") {
        surfaces = {Surface::Torus, Surface::Sphere};
    } else {
        surfaces = {parse_surface(*opt.surface)};
    }

    bool pass = true;
    json report{{"word", word_json(w)}, {"surfaces", json::array()}};

    {
        RectangleData rect = rectangle_data(w);
        bool ok = verify_eigenpair(word_matrix(w), rect.lambda, normalized_eigenvector(w));
        pass = pass && ok;
        report["eigenpair"] = ok;
        if (!opt.json) std::cout << "eigenpair: " << (ok ? "ok" : "MISMATCH") << "\n";
    }

    for (Surface surf : surfaces) {
        json entry{{"surface", surface_name(surf)}, {"checks", json::object()}};
        for (const Check& c : verify_surface(surf, w)) {
            pass = pass && c.ok;
            entry["checks"][c.name] = c.ok;
            if (!opt.json)
                std::cout << "[" << surface_name(surf) << "] " << c.name << ": "
                          << (c.ok ? "ok" : "MISMATCH") << "\n";
        }
        report["surfaces"].push_back(std::move(entry));
    }

    report["pass"] = pass;
    if (opt.json)
        std::cout << report.dump() << "\n";
    else
        std::cout << (pass ? "pass" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

int cmd_batch(const Options& opt) {
    std::ifstream in(arg(opt, 0, "file"));
    require_arg_count(opt, 1);
    if (!in) throw std::runtime_error("cannot open " + opt.args[0]);

    json rows = json::array();
    if (!opt.json)
        std::cout << "word\tdilatation\tlength_torus\ttotal_torus\tlength_sphere\ttotal_sphere"
                     "\tsymmetric\n";
    std::string line;
    int lineno = 0;
    bool had_error = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string text = line;
        text.erase(0, text.find_first_not_of(" \t\r"));
        text.erase(text.find_last_not_of(" \t\r") + 1);
        if (text.empty()) continue;
        try {
            ParamWord w = read_word(text, opt.reverse);
            ParamWord c = canonical_form(w);
            CycleDescriptor torus = torus_cycle(w);
            CycleDescriptor sphere = sphere_cycle(w);
            if (opt.json) {
                rows.push_back({{"word", c.to_string()},
                                {"dilatation", quad_json(torus.dilatation)},
                                {"length_torus", torus.length},
                                {"total_torus", torus.total},
                                {"length_sphere", sphere.length},
                                {"total_sphere", sphere.total},
                                {"symmetric", is_symmetric(w)}});
            } else {
                std::cout << c.to_string() << "\t" << torus.dilatation.to_string() << "\t"
                          << torus.length << "\t" << torus.total << "\t" << sphere.length << "\t"
                          << sphere.total << "\t" << (is_symmetric(w) ? "yes" : "no") << "\n";
            }
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            had_error = true;
        }
    }
    if (opt.json) std::cout << rows.dump() << "\n";
    return had_error ? 1 : 0;
}

int dispatch(const std::string& sub, const Options& opt) {
    if (sub == "dilatation") return cmd_dilatation(opt);
    if (sub == "eigenvector") return cmd_eigenvector(opt);
    if (sub == "cycle") return cmd_cycle(opt);
    if (sub == "simulate") return cmd_simulate(opt);
    if (sub == "conjugate") return cmd_conjugate(opt);
    if (sub == "canonical") return cmd_canonical(opt);
    if (sub == "verify") return cmd_verify(opt);
    if (sub == "batch") return cmd_batch(opt);
    throw UsageFailure{"unknown subcommand \"" + sub + "\""};
}

}  // namespace

int main(int argc, char** argv) {
    po::options_description visible("options");
    visible.add_options()
        ("help,h", "show usage")
        ("json", "emit JSON instead of text")
        ("reverse", "word triples given in application order")
        ("surface", po::value<std::string>(), "torus or sphere (verify also accepts both)")
        ("trace", "simulate: one JSON step record per line")
        ("snapshots", "simulate: include track snapshots in the trace")
        ("max-steps", po::value<long>(), "simulate: search bound, default 4x cycle length");
    po::options_description hidden;
    hidden.add_options()
        ("subcommand", po::value<std::string>())
        ("args", po::value<std::vector<std::string>>());
    po::positional_options_description positional;
    positional.add("subcommand", 1).add("args", -1);
    po::options_description all;
    all.add(visible).add(hidden);

    try {
        po::variables_map vm;
        po::store(
            po::command_line_parser(argc, argv).options(all).positional(positional).run(), vm);
        po::notify(vm);

        if (vm.count("help") || !vm.count("subcommand")) {
            std::cout << kUsage << "\n" << visible;
            return vm.count("help") ? 0 : 2;
        }

        Options opt;
        opt.json = vm.count("json") > 0;
        opt.reverse = vm.count("reverse") > 0;
        opt.trace = vm.count("trace") > 0;
        opt.snapshots = vm.count("snapshots") > 0;
        if (vm.count("surface")) opt.surface = vm["surface"].as<std::string>();
        if (vm.count("max-steps")) {
            long k = vm["max-steps"].as<long>();
            if (k <= 0) throw UsageFailure{"--max-steps must be positive"};
            opt.max_steps = k;
        }
        if (vm.count("args")) opt.args = vm["args"].as<std::vector<std::string>>();

        return dispatch(vm["subcommand"].as<std::string>(), opt);
    } catch (const UsageFailure& e) {
        std::cerr << "error: " << e.message << "\n" << kUsage;
        return 2;
    } catch (const po::error& e) {
        std::cerr << "error: " << e.what() << "\n" << kUsage;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
