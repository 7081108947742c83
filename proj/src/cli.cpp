#include "pfw/cli.hpp"

#include "pfw/bounds.hpp"
#include "pfw/config.hpp"
#include "pfw/errors.hpp"
#include "pfw/extend.hpp"
#include "pfw/gamma.hpp"
#include "pfw/infinite.hpp"
#include "pfw/repetition.hpp"
#include "pfw/transition.hpp"
#include "pfw/words.hpp"

#include "CLI11.hpp"

#include <cstddef>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace pfw {
namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_undecided = 3;

letter parse_letter(const std::string& text) {
    if (text.size() != 1) throw std::invalid_argument("expected a single letter, got \"" + text + "\"");
    return char_to_letter(text[0]);
}

right_infinite_word named_stream(const std::string& name) {
    if (name == "thue-morse") return thue_morse();
    if (name == "theta") return theta_word();
    throw std::invalid_argument("unknown stream name \"" + name + "\"");
}

// "0:1,1:2" -> {(0,1), (1,2)}
std::vector<std::pair<letter, letter>> parse_relabel_map(const std::string& text) {
    std::vector<std::pair<letter, letter>> mapping;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("malformed relabel entry \"" + item + "\"");
        mapping.emplace_back(parse_letter(item.substr(0, colon)), parse_letter(item.substr(colon + 1)));
    }
    if (mapping.empty()) throw std::invalid_argument("empty relabel map");
    return mapping;
}

const char* status_name(extend_status s) {
    switch (s) {
        case extend_status::extendable_to_depth: return "extendable-to-depth";
        case extend_status::not_extendable: return "not-extendable";
        case extend_status::undecided: return "undecided";
    }
    return "undecided";
}

const char* yn(bool v) { return v ? "true" : "false"; }

struct cli_state {
    bool quiet = false;

    std::string alpha;
    std::string word_text;
    std::string u_text;
    std::string v_text;
    std::string w1_text;
    std::string w2_text;
    std::string g_text;
    std::string x_text;
    std::string stream_name;
    std::string relabel_map;
    std::string side = "right";
    std::string certificate_path;
    int k = 3;
    std::size_t length = 0;
    std::size_t depth = search_limits{}.probe_depth;
    std::size_t max_len = 0;
    unsigned jobs = 1;
    bool count_only = false;
};

int run_check(const cli_state& st, std::ostream& out) {
    const power_bound b = parse_power_bound(st.alpha);
    const bool pf = is_power_free(parse_word(st.word_text), b);
    if (st.quiet)
        out << yn(pf) << '\n';
    else
        out << "power-free: " << yn(pf) << '\n';
    return pf ? exit_ok : exit_negative;
}

int run_maxexp(const cli_state& st, std::ostream& out) {
    const exponent_report rep = max_factor_exponent(parse_word(st.word_text));
    const std::string core = rep.max_exponent.str() + " period=" + std::to_string(rep.witness_period);
    if (st.quiet)
        out << core << '\n';
    else
        out << "max_exponent: " << core << " span=[" << rep.span_begin << "," << rep.span_end
            << ")\n";
    return exit_ok;
}

int run_generate(const cli_state& st, std::ostream& out) {
    right_infinite_word t = named_stream(st.stream_name);
    if (!st.relabel_map.empty()) t = relabel(t, parse_relabel_map(st.relabel_map));
    const word w = t.prefix(st.length);
    if (st.quiet)
        out << w.str() << '\n';
    else
        out << "word: " << w.str() << '\n';
    return exit_ok;
}

int run_enumerate(const cli_state& st, std::ostream& out) {
    const power_bound b = parse_power_bound(st.alpha);
    const std::vector<word> words = enumerate_power_free(st.k, b, st.length, {}, st.jobs);
    if (!st.count_only) {
        for (const word& w : words) {
            if (st.quiet)
                out << w.str() << '\n';
            else
                out << "word: " << w.str() << '\n';
        }
    }
    if (st.count_only || !st.quiet) {
        if (st.quiet)
            out << words.size() << '\n';
        else
            out << "count: " << words.size() << '\n';
    }
    return exit_ok;
}

int run_extendable(const cli_state& st, std::ostream& out) {
    const power_bound b = parse_power_bound(st.alpha);
    const word w = parse_word(st.word_text);
    const extend_verdict v = st.side == "left" ? left_extendable(w, st.k, b, st.depth)
                                               : right_extendable(w, st.k, b, st.depth);
    if (st.quiet) {
        out << status_name(v.status) << '\n';
    } else {
        out << "status: " << status_name(v.status) << '\n';
        out << "depth: " << v.depth << '\n';
        if (v.witness) out << "witness: " << v.witness->str() << '\n';
    }
    switch (v.status) {
        case extend_status::extendable_to_depth: return exit_ok;
        case extend_status::not_extendable: return exit_negative;
        case extend_status::undecided: return exit_undecided;
    }
    return exit_undecided;
}

int run_gamma_check(const cli_state& st, std::ostream& out) {
    const power_bound b = parse_power_bound(st.alpha);
    right_infinite_word t = named_stream(st.stream_name);
    if (!st.relabel_map.empty()) t = relabel(t, parse_relabel_map(st.relabel_map));
    gamma_witness wit{parse_word(st.w1_text), parse_word(st.w2_text), parse_word(st.g_text),
                      parse_letter(st.x_text), std::move(t), {}};
    const gamma_property_report rep = check_gamma(wit, st.k, b);
    if (st.quiet) {
        out << yn(rep.all()) << '\n';
    } else {
        out << "words_in_alphabet: " << yn(rep.words_in_alphabet) << '\n';
        out << "marker_in_alphabet: " << yn(rep.marker_in_alphabet) << '\n';
        out << "head_power_free: " << yn(rep.head_power_free) << '\n';
        out << "tail_power_free: " << yn(rep.tail_power_free) << '\n';
        out << "tail_avoids_marker: " << yn(rep.tail_avoids_marker) << '\n';
        out << "g_prefix_of_tail: " << yn(rep.g_prefix_of_tail) << '\n';
        out << "anchor_unique: " << yn(rep.anchor_unique) << '\n';
        out << "marker_balance: " << yn(rep.marker_balance) << '\n';
        out << "valid: " << yn(rep.all()) << '\n';
    }
    return rep.all() ? exit_ok : exit_negative;
}

int run_transition(const cli_state& st, std::ostream& out, std::ostream& err) {
    const power_bound b = parse_power_bound(st.alpha);
    const transition_certificate cert =
        build_transition(parse_word(st.u_text), parse_word(st.v_text), st.k, b);
    if (!st.certificate_path.empty()) {
        std::ofstream file(st.certificate_path);
        if (!file) {
            err << "error: cannot open \"" << st.certificate_path << "\" for writing\n";
            return exit_usage;
        }
        file << cert.render();
    }
    if (st.quiet)
        out << cert.w.str() << '\n';
    else
        out << cert.render();
    return exit_ok;
}

int run_oracle(const cli_state& st, std::ostream& out) {
    const power_bound b = parse_power_bound(st.alpha);
    const std::optional<word> w =
        minimal_transition_oracle(parse_word(st.u_text), parse_word(st.v_text), st.k, b, st.max_len);
    if (st.quiet) {
        out << (w ? w->str() : "none") << '\n';
    } else {
        out << "found: " << yn(w.has_value()) << '\n';
        if (w) {
            out << "w: " << w->str() << '\n';
            out << "length: " << w->size() << '\n';
        }
    }
    return w ? exit_ok : exit_negative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    cli_state st;
    CLI::App app{"power-free word toolkit"};
    app.require_subcommand(1);
    app.add_flag("--quiet", st.quiet, "print bare verdicts only");

    CLI::App* check = app.add_subcommand("check", "decide power-freeness of a word");
    check->add_option("--alpha", st.alpha, "exponent bound, e.g. 2, 7/4, 2+")->required();
    check->add_option("--word", st.word_text, "word in canonical encoding")->required();

    CLI::App* maxexp = app.add_subcommand("maxexp", "maximal factor exponent of a word");
    maxexp->add_option("--word", st.word_text, "nonempty word in canonical encoding")->required();

    CLI::App* generate = app.add_subcommand("generate", "prefix of a named infinite word");
    generate->add_option("--word", st.stream_name, "stream name: thue-morse or theta")->required();
    generate->add_option("--length", st.length, "prefix length")->required();
    generate->add_option("--relabel", st.relabel_map, "letter renaming, e.g. 0:1,1:2");

    CLI::App* enumerate = app.add_subcommand("enumerate", "all power-free words of a length");
    enumerate->add_option("--k", st.k, "alphabet size")->required();
    enumerate->add_option("--alpha", st.alpha, "exponent bound")->required();
    enumerate->add_option("--length", st.length, "word length")->required();
    enumerate->add_flag("--count-only", st.count_only, "print only the count");
    enumerate->add_option("--jobs", st.jobs, "worker threads");

    CLI::App* extendable = app.add_subcommand("extendable", "bounded-depth extendability probe");
    extendable->add_option("--side", st.side, "left or right")
        ->required()
        ->check(CLI::IsMember({"left", "right"}));
    extendable->add_option("--k", st.k, "alphabet size")->required();
    extendable->add_option("--alpha", st.alpha, "exponent bound")->required();
    extendable->add_option("--word", st.word_text, "power-free word")->required();
    extendable->add_option("--depth", st.depth, "extension depth to search");

    CLI::App* gamma_check = app.add_subcommand("gamma-check", "validate a splice witness");
    gamma_check->add_option("--w1", st.w1_text, "first head block");
    gamma_check->add_option("--w2", st.w2_text, "second head block");
    gamma_check->add_option("--x", st.x_text, "marker letter")->required();
    gamma_check->add_option("--g", st.g_text, "tail-prefix block");
    gamma_check->add_option("--t", st.stream_name, "stream name: thue-morse or theta")->required();
    gamma_check->add_option("--t-relabel", st.relabel_map, "letter renaming for the stream");
    gamma_check->add_option("--k", st.k, "alphabet size")->required();
    gamma_check->add_option("--alpha", st.alpha, "exponent bound")->required();

    CLI::App* transition = app.add_subcommand("transition", "construct a transition word");
    transition->add_option("--k", st.k, "alphabet size")->required();
    transition->add_option("--alpha", st.alpha, "exponent bound")->required();
    transition->add_option("--u", st.u_text, "left word");
    transition->add_option("--v", st.v_text, "right word");
    transition->add_option("--emit-certificate", st.certificate_path, "write the certificate here");

    CLI::App* oracle = app.add_subcommand("oracle", "shortest transition word by exhaustion");
    oracle->add_option("--k", st.k, "alphabet size")->required();
    oracle->add_option("--alpha", st.alpha, "exponent bound")->required();
    oracle->add_option("--u", st.u_text, "left word");
    oracle->add_option("--v", st.v_text, "right word");
    oracle->add_option("--max-len", st.max_len, "largest length to try")->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (app.got_subcommand(check)) return run_check(st, out);
        if (app.got_subcommand(maxexp)) return run_maxexp(st, out);
        if (app.got_subcommand(generate)) return run_generate(st, out);
        if (app.got_subcommand(enumerate)) return run_enumerate(st, out);
        if (app.got_subcommand(extendable)) return run_extendable(st, out);
        if (app.got_subcommand(gamma_check)) return run_gamma_check(st, out);
        if (app.got_subcommand(transition)) return run_transition(st, out, err);
        if (app.got_subcommand(oracle)) return run_oracle(st, out);
    } catch (const unsupported_parameters& e) {
        err << "unsupported parameters: " << e.what() << '\n';
        return exit_usage;
    } catch (const not_extendable_error& e) {
        err << "not extendable: " << e.what() << '\n';
        return exit_negative;
    } catch (const undecided_error& e) {
        err << "undecided: " << e.what() << '\n';
        return exit_undecided;
    } catch (const resource_limit_error& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_undecided;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    err << "error: no subcommand\n";
    return exit_usage;
}

}  // namespace pfw
