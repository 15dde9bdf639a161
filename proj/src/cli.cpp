#include "hooksum/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hooksum/error.hpp"
#include "hooksum/hook_sums.hpp"
#include "hooksum/identities.hpp"
#include "hooksum/lattice_paths.hpp"
#include "hooksum/motzkin.hpp"
#include "hooksum/tableaux.hpp"

namespace hooksum::cli {

Json to_json(const OutputRecord& r) {
    Json j = Json::object();
    j["query"] = r.query;
    j["parameters"] = r.parameters;
    j["value"] = r.value;
    j["method"] = r.method;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j = Json::object();
    j["identity"] = r.identity;
    j["range"] = Json::array({r.lo, r.hi});
    j["status"] = std::string(to_string(r.status));
    if (r.first_failure) {
        Json f = Json::object();
        f["index"] = r.first_failure->index;
        f["lhs"] = r.first_failure->lhs;
        f["rhs"] = r.first_failure->rhs;
        j["first_failure"] = f;
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

Json to_json(const CharacterSum& cs, OutputRecord record) {
    record.value = to_decimal(degree(cs));
    Json j = to_json(record);
    Json terms = Json::array();
    for (const auto& [p, mult] : cs.terms()) {
        Json t = Json::object();
        t["partition"] = format_partition(p);
        t["multiplicity"] = std::to_string(mult);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

std::optional<std::uint64_t> enum_cap_from_env(const char* value) {
    if (value == nullptr || *value == '\0') return std::nullopt;
    const std::string_view text(value);
    std::uint64_t cap = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        raise(ErrorCode::InvalidSyntax, "HOOKSUM_ENUM_CAP must be a natural number, got '" + std::string(text) + "'");
    }
    return cap;
}

namespace {

const std::map<std::string, std::string, std::less<>> kSynopsis{
    {"syt", "usage: hooksum syt count|oracle --shape <partition> [--format text|json]"},
    {"hooksum", "usage: hooksum hooksum --k <k> --l <l> --n <n> [--method direct|closed] [--format text|json]"},
    {"starsum", "usage: hooksum starsum --n <n> [--method direct|closed] [--format text|json]"},
    {"seq", "usage: hooksum seq a|motzkin|catalan --from <lo> --to <hi> [--method explicit|recurrence] "
            "[--format text|json|csv]"},
    {"humps", "usage: hooksum humps --kind dyck|motzkin --n <n> [--method enumerate|closed] [--format text|json]"},
    {"character", "usage: hooksum character psi|omega|check-p3 --n <n> [--format text|json]"},
    {"verify", "usage: hooksum verify --identity <name>|all [--from <lo> --to <hi>] [--profile quick|full] "
               "[--format text|json] | hooksum verify --list"},
    {"table", "usage: hooksum table --k <k> --l <l> --from <lo> --to <hi> [--method direct|closed] "
              "--format json|csv|text"},
};

std::string general_synopsis() {
    std::string s = "usage: hooksum <command> [options]; commands:";
    for (const auto& [name, unused] : kSynopsis) s += " " + name;
    return s;
}

struct Caps {
    std::uint64_t tableau = kDefaultTableauCap;
    PathCaps paths;
};

struct Options {
    // shared
    std::string format = "text";
    std::string method;
    // syt
    std::string shape;
    // hooksum/table
    std::uint32_t k = 0;
    std::uint32_t l = 0;
    std::uint64_t n = 0;
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    // seq / character / humps
    std::string which;
    std::string kind;
    // verify
    std::string identity;
    std::string profile = "quick";
    bool list = false;
};

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err, Caps caps) : out_(out), err_(err), caps_(caps) {}

    int syt(const std::string& which, const Options& o) {
        const Partition p = parse_partition(o.shape);
        const bool oracle = which == "oracle";
        const BigNatural v = oracle ? syt_enumerate_count(p, caps_.tableau) : syt_count(p);
        OutputRecord r{"syt " + which + " --shape " + format_partition(p), Json::object(), to_decimal(v),
                       oracle ? "enumerate" : "hook-formula"};
        r.parameters["shape"] = format_partition(p);
        return emit(r, o.format);
    }

    int hooksum(const Options& o) {
        const auto method = parse_method(o.method.empty() ? "direct" : o.method);
        const BigNatural v = hook_sum({o.k, o.l}, o.n, method);
        const std::string m = method == HookSumMethod::Direct ? "direct" : "closed";
        OutputRecord r{"hooksum --k " + std::to_string(o.k) + " --l " + std::to_string(o.l) + " --n " +
                           std::to_string(o.n) + " --method " + m,
                       Json::object(), to_decimal(v), m};
        r.parameters["k"] = o.k;
        r.parameters["l"] = o.l;
        r.parameters["n"] = o.n;
        return emit(r, o.format);
    }

    int starsum(const Options& o) {
        const auto method = parse_method(o.method.empty() ? "direct" : o.method);
        const std::string m = method == HookSumMethod::Direct ? "direct" : "closed";
        OutputRecord r{"starsum --n " + std::to_string(o.n) + " --method " + m, Json::object(),
                       to_decimal(star_sum(o.n, method)), m};
        r.parameters["n"] = o.n;
        return emit(r, o.format);
    }

    int seq(const Options& o) {
        check_range(o.from, o.to);
        std::vector<BigNatural> values;
        std::string method;
        if (o.which == "a") {
            const bool recurrence = o.method.empty() || o.method == "recurrence";
            if (!recurrence && o.method != "explicit") usage_error("unknown method '" + o.method + "'");
            method = recurrence ? "recurrence" : "explicit";
            const auto table = motzkin_sum_table(o.to, recurrence ? SequenceMethod::Recurrence : SequenceMethod::Explicit);
            values.assign(table.begin() + static_cast<std::ptrdiff_t>(o.from), table.end());
        } else if (o.which == "motzkin") {
            method = "a(n)+a(n+1)";
            const auto table = motzkin_number_table(o.to);
            values.assign(table.begin() + static_cast<std::ptrdiff_t>(o.from), table.end());
        } else {
            method = "binomial";
            for (std::uint64_t i = o.from; i <= o.to; ++i) values.push_back(catalan(i));
        }
        const std::string query = "seq " + o.which + " --from " + std::to_string(o.from) + " --to " +
                                  std::to_string(o.to);
        return emit_series(query, "index", o.from, values, method, o.format, Json::object());
    }

    int humps(const Options& o) {
        if (o.kind != "dyck" && o.kind != "motzkin") usage_error("--kind must be dyck or motzkin");
        const PathKind kind = o.kind == "dyck" ? PathKind::Dyck : PathKind::Motzkin;
        const std::string m = o.method.empty() ? "closed" : o.method;
        if (m != "enumerate" && m != "closed") usage_error("--method must be enumerate or closed");
        const HumpMethod method = m == "enumerate" ? HumpMethod::Enumerate : HumpMethod::Closed;
        const std::uint64_t cap = kind == PathKind::Dyck ? caps_.paths.dyck : caps_.paths.motzkin;
        OutputRecord r{"humps --kind " + o.kind + " --n " + std::to_string(o.n) + " --method " + m, Json::object(),
                       to_decimal(total_humps(kind, o.n, method, cap)), m};
        r.parameters["kind"] = o.kind;
        r.parameters["n"] = o.n;
        return emit(r, o.format);
    }

    int character(const Options& o) {
        if (o.which == "check-p3") return print_reports({verify_p3(o.n)}, o.format, false);
        const CharacterSum cs = o.which == "psi" ? psi(o.n) : omega(o.n);
        OutputRecord r{"character " + o.which + " --n " + std::to_string(o.n), Json::object(), "", "young-rule"};
        r.parameters["n"] = o.n;
        if (o.format == "json") {
            out_ << to_json(cs, r).dump() << '\n';
            return kExitOk;
        }
        check_format(o.format, {"text"});
        for (const auto& [p, mult] : cs.terms()) out_ << display_partition(p) << ' ' << mult << '\n';
        out_ << "degree " << to_decimal(degree(cs)) << '\n';
        return kExitOk;
    }

    int verify_cmd(const Options& o, bool range_given) {
        if (o.list) {
            for (const auto& def : identity_registry()) {
                out_ << def.name << "  " << def.statement << "  [" << def.sides << "]\n";
            }
            return kExitOk;
        }
        if (o.identity.empty()) usage_error("--identity is required");
        if (o.profile != "quick" && o.profile != "full") usage_error("--profile must be quick or full");
        const Profile profile = o.profile == "full" ? Profile::Full : Profile::Quick;
        const VerifyOptions vo{caps_.paths};
        std::vector<VerificationReport> reports;
        if (o.identity == "all") {
            if (range_given) {
                for (const auto& def : identity_registry()) {
                    const std::uint64_t lo = std::max(o.from, def.domain_min);
                    if (lo > o.to) continue;
                    reports.push_back(verify(def.name, lo, o.to, vo));
                }
            } else {
                reports = verify_all(profile, vo);
            }
        } else if (range_given) {
            reports.push_back(verify(o.identity, o.from, o.to, vo));
        } else {
            reports.push_back(verify(o.identity, profile, vo));
        }
        return print_reports(reports, o.format, o.identity == "all");
    }

    int table(const Options& o) {
        check_range(o.from, o.to);
        const auto method = parse_method(o.method.empty() ? "direct" : o.method);
        std::vector<BigNatural> values;
        for (std::uint64_t n = o.from; n <= o.to; ++n) values.push_back(hook_sum({o.k, o.l}, n, method));
        const std::string m = method == HookSumMethod::Direct ? "direct" : "closed";
        Json params = Json::object();
        params["k"] = o.k;
        params["l"] = o.l;
        const std::string query = "table --k " + std::to_string(o.k) + " --l " + std::to_string(o.l) + " --from " +
                                  std::to_string(o.from) + " --to " + std::to_string(o.to) + " --method " + m;
        return emit_series(query, "n", o.from, values, m, o.format, params);
    }

    [[noreturn]] static void usage_error(const std::string& what) { throw CLI::ValidationError(what); }

private:
    static HookSumMethod parse_method(const std::string& m) {
        if (m == "direct") return HookSumMethod::Direct;
        if (m == "closed") return HookSumMethod::Closed;
        usage_error("--method must be direct or closed, got '" + m + "'");
    }

    static void check_range(std::uint64_t lo, std::uint64_t hi) {
        if (lo > hi) usage_error("--from must not exceed --to");
    }

    static void check_format(const std::string& f, std::initializer_list<std::string_view> allowed) {
        if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
            usage_error("unsupported --format '" + f + "'");
        }
    }

    int emit(const OutputRecord& r, const std::string& format) {
        check_format(format, {"text", "json"});
        if (format == "json") {
            out_ << to_json(r).dump() << '\n';
        } else {
            out_ << r.value << '\n';
        }
        return kExitOk;
    }

    int emit_series(const std::string& query, const std::string& index_name, std::uint64_t from,
                    const std::vector<BigNatural>& values, const std::string& method, const std::string& format,
                    const Json& base_params) {
        check_format(format, {"text", "json", "csv"});
        if (format == "csv") {
            out_ << "index,value,method\n";
            for (std::size_t i = 0; i < values.size(); ++i) {
                out_ << from + i << ',' << to_decimal(values[i]) << ',' << method << '\n';
            }
        } else if (format == "json") {
            Json arr = Json::array();
            for (std::size_t i = 0; i < values.size(); ++i) {
                OutputRecord r{query, base_params, to_decimal(values[i]), method};
                r.parameters[index_name] = from + i;
                arr.push_back(to_json(r));
            }
            out_ << arr.dump() << '\n';
        } else {
            for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << to_decimal(values[i]);
            out_ << '\n';
        }
        return kExitOk;
    }

    int print_reports(const std::vector<VerificationReport>& reports, const std::string& format, bool as_array) {
        check_format(format, {"text", "json"});
        bool ok = true;
        Json arr = Json::array();
        for (const auto& r : reports) {
            ok = ok && r.passed();
            if (format == "json") {
                arr.push_back(to_json(r));
                continue;
            }
            out_ << (r.status == VerificationStatus::Pass   ? "PASS"
                     : r.status == VerificationStatus::Fail ? "FAIL"
                                                            : "PARTIAL")
                 << ' ' << r.identity << " [" << r.lo << ", " << r.hi << "] " << r.elapsed.count() << "s\n";
            if (r.first_failure) {
                const auto& f = *r.first_failure;
                out_ << "  first failure at " << f.index << ": " << f.lhs << " != " << f.rhs;
                if (!f.note.empty()) out_ << " (" << f.note << ")";
                out_ << '\n';
            }
        }
        if (format == "json") out_ << (as_array ? arr : arr.front()).dump() << '\n';
        return ok ? kExitOk : kExitVerificationFailed;
    }

    std::ostream& out_;
    std::ostream& err_;
    Caps caps_;
};

Caps caps_from(const std::optional<std::string>& env_cap) {
    Caps caps;
    if (!env_cap) return caps;
    if (const auto cap = enum_cap_from_env(env_cap->c_str())) {
        caps.tableau = *cap;
        caps.paths.dyck = *cap;
        caps.paths.motzkin = *cap;
    }
    return caps;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::optional<std::string> env_cap) {
    CLI::App app{"Hook-constrained SYT sums, Motzkin sums and lattice-path humps in exact arithmetic", "hooksum"};
    app.require_subcommand(1);
    Options o;

    auto* syt = app.add_subcommand("syt", "SYT count of a shape");
    syt->require_subcommand(1);
    for (const char* which : {"count", "oracle"}) {
        auto* sub = syt->add_subcommand(which, std::string(which) == "count" ? "hook length formula" : "brute-force enumeration");
        sub->add_option("--shape", o.shape, "partition, e.g. 4,2^3,1")->required();
        sub->add_option("--format", o.format);
    }

    auto* hs = app.add_subcommand("hooksum", "S(k,l;n)");
    hs->add_option("--k", o.k)->required();
    hs->add_option("--l", o.l)->required();
    hs->add_option("--n", o.n)->required();
    hs->add_option("--method", o.method);
    hs->add_option("--format", o.format);

    auto* star = app.add_subcommand("starsum", "S*(2,2;n)");
    star->add_option("--n", o.n)->required();
    star->add_option("--method", o.method);
    star->add_option("--format", o.format);

    auto* seq = app.add_subcommand("seq", "a(n), Motzkin or Catalan numbers over a range");
    seq->add_option("sequence", o.which)->required()->check(CLI::IsMember({"a", "motzkin", "catalan"}));
    seq->add_option("--from", o.from)->required();
    seq->add_option("--to", o.to)->required();
    seq->add_option("--method", o.method);
    seq->add_option("--format", o.format);

    auto* humps = app.add_subcommand("humps", "total humps over Dyck or Motzkin paths");
    humps->add_option("--kind", o.kind)->required();
    humps->add_option("--n", o.n)->required();
    humps->add_option("--method", o.method);
    humps->add_option("--format", o.format);

    auto* ch = app.add_subcommand("character", "Psi(n), Omega(n) and the doubled character identity");
    ch->add_option("which", o.which)->required()->check(CLI::IsMember({"psi", "omega", "check-p3"}));
    ch->add_option("--n", o.n)->required();
    ch->add_option("--format", o.format);

    auto* ver = app.add_subcommand("verify", "check registered identities over exact ranges");
    ver->add_option("--identity", o.identity);
    auto* from_opt = ver->add_option("--from", o.from);
    auto* to_opt = ver->add_option("--to", o.to);
    from_opt->needs(to_opt);
    to_opt->needs(from_opt);
    ver->add_option("--profile", o.profile);
    ver->add_option("--format", o.format);
    ver->add_flag("--list", o.list, "list registered identities");

    auto* tab = app.add_subcommand("table", "S(k,l;n) over a range of n");
    tab->add_option("--k", o.k)->required();
    tab->add_option("--l", o.l)->required();
    tab->add_option("--from", o.from)->required();
    tab->add_option("--to", o.to)->required();
    tab->add_option("--method", o.method);
    tab->add_option("--format", o.format)->required();

    auto synopsis_for = [&]() {
        if (!args.empty()) {
            if (auto it = kSynopsis.find(args.front()); it != kSynopsis.end()) return it->second;
        }
        return general_synopsis();
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        Runner runner(out, err, caps_from(env_cap));
        if (syt->parsed()) {
            for (auto* sub : syt->get_subcommands()) return runner.syt(sub->get_name(), o);
        }
        if (hs->parsed()) return runner.hooksum(o);
        if (star->parsed()) return runner.starsum(o);
        if (seq->parsed()) return runner.seq(o);
        if (humps->parsed()) return runner.humps(o);
        if (ch->parsed()) return runner.character(o);
        if (ver->parsed()) return runner.verify_cmd(o, from_opt->count() > 0);
        if (tab->parsed()) return runner.table(o);
        return kExitUsage;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "hooksum: " << e.what() << '\n' << synopsis_for() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "hooksum: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace hooksum::cli
