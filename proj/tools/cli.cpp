#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <locale>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ocdna/bounds.hpp"
#include "ocdna/channel.hpp"
#include "ocdna/codec.hpp"
#include "ocdna/codes_substitution.hpp"
#include "ocdna/equivalence.hpp"
#include "ocdna/errors.hpp"
#include "ocdna/text_io.hpp"

namespace ocdna::cli {

namespace {

/// A flag combination that no verb accepts; reported with exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::string kCodeTag = "# code ";

struct Options {
    // code parameters
    std::string family;
    std::string spec_file;
    int q = 2;
    int k = 0;
    int n = 0;
    int m = 0;
    int t = 1;
    std::string a;
    std::uint64_t p = 0;
    std::uint64_t p1 = 0;
    std::uint64_t p2 = 0;
    // data
    std::string in;
    std::string out;
    std::string message;
    std::string format = "matrix";
    bool print_word = false;
    bool codebook = false;
    // channel
    std::string model;
    std::string e;
    std::string plan;
    std::string plan_out;
    std::uint64_t seed = 0;
    // bounds
    std::string bound_family;
    std::string n_list;
    int l = 0;
    int m0 = 0;
    // misc
    std::string map;
    std::string table_kind;
    int trials = 50;
    bool exhaustive = false;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("OCDNA_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("OCDNA_SEED is not a nonnegative integer: '") + env + "'");
    }
    return 0;
}

std::string read_text(const std::string& path) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    ss << f.rdbuf();
    return ss.str();
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.out.empty() || o.out == "-") {
        out << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::invalid_argument("cannot write '" + o.out + "'");
    f << text;
}

/// The code spec embedded in a data file, if any.
std::string embedded_spec(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(kCodeTag, 0) == 0) return line.substr(kCodeTag.size());
    return {};
}

CodeSpec code_spec(const Options& o, const std::string& data) {
    CodeSpec s;
    if (!o.spec_file.empty()) {
        s = CodeSpec::parse(read_text(o.spec_file));
    } else if (!o.family.empty()) {
        s.family = parse_family(o.family);
        s.q = o.q;
        s.k = o.k;
        s.n = o.n;
        s.m = o.m;
        s.t = o.t;
        s.p = o.p;
        s.p1 = o.p1;
        s.p2 = o.p2;
        if (!o.a.empty())
            for (int v : parse_int_list(o.a)) s.a.push_back(v);
    } else if (const auto text = embedded_spec(data); !text.empty()) {
        s = CodeSpec::parse(text);
    } else {
        throw UsageError("no code given: use --family, --spec or a file carrying a '# code' line");
    }
    if (s.k <= 0) throw UsageError("--k must be positive");
    return s;
}

ErrorModel parse_model(const std::string& name, const std::string& e) {
    if (name.empty()) throw UsageError("--model is required");
    if (e.empty()) throw UsageError("--e is required");
    const auto b = parse_int_list(e);
    if (name == "sub-per-row") return ErrorModel::sub_per_row(b);
    if (name == "del-per-row") return ErrorModel::del_per_row(b);
    if (name == "sub-t-rows") return ErrorModel::sub_t_rows(b);
    if (name == "del-t-rows") return ErrorModel::del_t_rows(b);
    if (name == "sub-total" || name == "del-total") {
        if (b.size() != 1) throw UsageError("--e takes one budget for a total model");
        return name == "sub-total" ? ErrorModel::sub_total(b[0]) : ErrorModel::del_total(b[0]);
    }
    throw UsageError("unknown model '" + name + "'");
}

std::string rows_inline(const ReceivedRows& r) {
    std::string s;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (i) s += '/';
        for (int d : r.rows[i]) s += static_cast<char>('0' + d);
    }
    return s;
}

std::string spec_flags(const CodeSpec& s) {
    std::ostringstream os;
    os << "--family " << family_name(s.family) << " --q " << s.q << " --k " << s.k;
    if (s.n) os << " --n " << s.n;
    if (s.m) os << " --m " << s.m;
    if (s.t != 1) os << " --t " << s.t;
    if (!s.a.empty()) {
        os << " --a ";
        for (std::size_t i = 0; i < s.a.size(); ++i) os << (i ? "," : "") << s.a[i];
    }
    if (s.p) os << " --p " << s.p;
    if (s.p1) os << " --p1 " << s.p1;
    if (s.p2) os << " --p2 " << s.p2;
    return os.str();
}

WordFormat word_format(const std::string& f) {
    if (f == "matrix") return WordFormat::Matrix;
    if (f == "ranks") return WordFormat::Ranks;
    throw UsageError("--format must be matrix or ranks");
}

// ---- verbs -----------------------------------------------------------------

int do_encode(const Options& o, std::ostream& out) {
    std::string data;
    if (o.message.empty()) data = read_text(o.in);
    const auto codec = make_codec(code_spec(o, data));
    std::vector<int> msg;
    if (!o.message.empty()) {
        msg = parse_int_list(o.message);
    } else {
        std::istringstream in(data);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            msg = parse_int_list(line);
            break;
        }
    }
    const Word w = codec->encode(msg);
    std::ostringstream os;
    os << kCodeTag << codec->spec().to_string() << '\n';
    write_word(os, w, word_format(o.format));
    emit(o, out, os.str());
    return 0;
}

int do_decode(const Options& o, std::ostream& out) {
    const std::string data = read_text(o.in);
    const auto codec = make_codec(code_spec(o, data));
    std::istringstream in(data);
    const ReceivedRows r = read_received(in);
    const Word w = codec->decode(r);
    if (!codec->contains(w) || !within_model(w, r, codec->channel_model()))
        throw DecodeError("received rows are outside the correction range of the code");
    std::ostringstream os;
    if (o.print_word) {
        os << kCodeTag << codec->spec().to_string() << '\n';
        write_word(os, w, word_format(o.format));
    } else {
        os << join_ints(codec->message_of(w)) << '\n';
    }
    emit(o, out, os.str());
    return 0;
}

int do_contains(const Options& o, std::ostream& out) {
    const std::string data = read_text(o.in);
    const auto codec = make_codec(code_spec(o, data));
    std::istringstream in(data);
    const Word w = read_word(in);
    emit(o, out, codec->contains(w) ? "true\n" : "false\n");
    return 0;
}

int do_corrupt(const Options& o, std::ostream& out) {
    const std::string data = read_text(o.in);
    std::istringstream in(data);
    const Word w = read_word(in);
    const ErrorModel model = parse_model(o.model, o.e);
    model.check_rows(w.k());
    Corruption c;
    if (!o.plan.empty()) {
        std::istringstream ps(read_text(o.plan));
        c.plan = read_plan(ps);
        c.received = apply_errors(w, model, c.plan);
    } else {
        c = random_errors(w, model, o.seed);
    }
    std::ostringstream os;
    if (const auto s = embedded_spec(data); !s.empty()) os << kCodeTag << s << '\n';
    write_received(os, c.received);
    emit(o, out, os.str());
    if (!o.plan_out.empty()) {
        std::ofstream f(o.plan_out);
        if (!f) throw std::invalid_argument("cannot write '" + o.plan_out + "'");
        write_plan(f, c.plan);
    }
    return 0;
}

int do_verify(const Options& o, std::ostream& out) {
    const std::string data = read_text(o.in);
    std::istringstream in(data);
    const auto book = read_codebook(in);
    const ErrorModel model = parse_model(o.model, o.e);
    if (!book.empty()) model.check_rows(book.front().k());
    const OracleVerdict v = oracle_is_code(book, model);
    std::ostringstream os;
    os << "model: " << model.describe() << '\n';
    os << "codewords: " << book.size() << '\n';
    os << "verdict: " << (v.is_code ? "true" : "false") << '\n';
    if (v.witness) {
        os << "witness-first: " << join_ints(v.witness->first.ranks()) << '\n';
        os << "witness-second: " << join_ints(v.witness->second.ranks()) << '\n';
        os << "witness-output: " << rows_inline(v.witness->output) << '\n';
    }
    emit(o, out, os.str());
    return 0;
}

BoundReport one_bound(const Options& o, int n, const std::vector<int>& e) {
    const std::string& f = o.bound_family;
    auto single = [&]() {
        if (e.size() != 1) throw UsageError(f + " takes one budget in --e");
        return e[0];
    };
    if (f == "sp-per-row") return sp_bound_per_row(o.q, o.k, n, e);
    if (f == "sp-total") return sp_bound_total(o.q, o.k, n, single());
    if (f == "asym-total")
        return o.l > 0 ? asym_bound_total(o.q, o.k, n, single(), o.l) : asym_bound_total_best(o.q, o.k, n, single());
    if (f == "asym-general") return asym_bound_general(o.q, o.k, n, e);
    if (f == "asym-thm3-i") return asym_bound_thm3(o.q, o.k, n, e, Thm3Variant::I);
    if (f == "asym-thm3-ii") return asym_bound_thm3(o.q, o.k, n, e, Thm3Variant::II);
    if (f == "asym-thm3-iii") return asym_bound_thm3(o.q, o.k, n, e, Thm3Variant::III);
    if (f == "asym-even-e") return asym_bound_even_e(o.q, o.k, n, single());
    if (f == "asym-m-gt-q") {
        if (o.m0 <= 0) throw UsageError("asym-m-gt-q needs --m0");
        return bound_m_gt_q(o.q, o.k, n, e, o.m0);
    }
    if (f == "gspb-deletion") return gspb_deletion_bound(n, o.k);
    if (f == "asym-deletion") return asym_deletion_bound(o.k, n);
    throw UsageError("unknown bound family '" + f + "'");
}

int do_bounds(const Options& o, std::ostream& out) {
    if (o.bound_family.empty()) throw UsageError("--family is required");
    if (o.k <= 0) throw UsageError("--k must be positive");
    if (o.n_list.empty()) throw UsageError("--n is required");
    const bool deletion = o.bound_family == "gspb-deletion" || o.bound_family == "asym-deletion";
    if (!deletion && o.e.empty()) throw UsageError("--e is required");
    const auto e = o.e.empty() ? std::vector<int>{} : parse_int_list(o.e);
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "family,q,k,n,budgets,value,floor,log10,asymptotic\n";
    for (int n : parse_int_list(o.n_list)) {
        const BoundReport r = one_bound(o, n, e);
        os << r.family << ',' << r.q << ',' << r.k << ',' << r.n << ',' << join_ints(r.budgets, ';') << ','
           << r.value_string() << ',' << r.floor() << ',' << std::fixed << std::setprecision(6) << r.log10() << ','
           << (r.asymptotic ? "true" : "false") << '\n';
        os.unsetf(std::ios::floatfield);
    }
    emit(o, out, os.str());
    return 0;
}

int do_transform(const Options& o, std::ostream& out) {
    if (o.map.empty()) throw UsageError("--map is required");
    const EquivalenceMap map = EquivalenceMap::parse(o.map);
    const std::string data = read_text(o.in);
    std::istringstream in(data);
    std::ostringstream os;
    if (o.codebook) {
        const auto book = read_codebook(in);
        const auto moved = transport_code(book, map);
        if (moved.empty()) throw std::invalid_argument("empty codebook");
        write_codebook(os, moved, moved.front().q(), moved.front().k(), moved.front().n());
    } else {
        write_word(os, map.apply(read_word(in)), word_format(o.format));
    }
    emit(o, out, os.str());
    return 0;
}

int do_table(const Options& o, std::ostream& out) {
    if (o.table_kind != "doll") throw UsageError("only 'table doll' is available");
    if (o.k <= 0 || o.n <= 0) throw UsageError("table doll needs --n and --k");
    emit(o, out, DollCode(o.q, o.k, o.n).table_csv());
    return 0;
}

int do_roundtrip(const Options& o, std::ostream& out) {
    const CodeSpec spec = code_spec(o, {});
    const auto codec = make_codec(spec);
    if (!codec->has_encoder()) throw std::invalid_argument(family_name(spec.family) + " has no encoder");
    const ErrorModel model = codec->channel_model();
    const std::int64_t base = alphabet_size(codec->q(), codec->k());
    const int len = codec->message_length();

    std::uint64_t patterns = 0, passed = 0, messages = 0;
    std::string first_failure;
    auto check = [&](const std::vector<int>& msg, const Word& cw, const ReceivedRows& r, const std::string& repro) {
        ++patterns;
        bool ok = false;
        try {
            const Word d = codec->decode(r);
            ok = d == cw && codec->message_of(d) == msg;
        } catch (const std::exception&) {
            ok = false;
        }
        if (ok)
            ++passed;
        else if (first_failure.empty())
            first_failure = "first-failure: message=" + join_ints(msg) + " received=" + rows_inline(r) + '\n' + repro;
    };

    if (o.exhaustive) {
        BigInt total = big_pow(BigInt(base), static_cast<unsigned>(len));
        if (total > 200000) throw std::invalid_argument("message space too large for --exhaustive; use --trials");
        std::vector<int> msg(len, 0);
        for (BigInt i = 0; i < total; ++i) {
            BigInt v = i;
            for (auto& d : msg) {
                d = static_cast<int>(v % base);
                v /= base;
            }
            ++messages;
            const Word cw = codec->encode(msg);
            for (const auto& r : raw_received_set(cw, model)) check(msg, cw, r, "");
        }
    } else {
        if (o.trials <= 0) throw UsageError("--trials must be positive");
        SplitMix64 rng(o.seed);
        for (int trial = 0; trial < o.trials; ++trial) {
            std::vector<int> msg(len);
            for (auto& d : msg) d = static_cast<int>(rng.below(static_cast<std::uint64_t>(base)));
            ++messages;
            const Word cw = codec->encode(msg);
            const std::uint64_t s = rng.next();
            const Corruption c = random_errors(cw, model, s);
            std::string e;
            for (std::size_t i = 0; i < model.budgets.size(); ++i) e += (i ? "," : "") + std::to_string(model.budgets[i]);
            const std::string names[] = {"sub-per-row", "sub-total", "sub-t-rows", "del-per-row", "del-total", "del-t-rows"};
            check(msg, cw, c.received,
                  "reproduce: ocdna-cli encode " + spec_flags(codec->spec()) + " --message " + join_ints(msg) +
                      " | ocdna-cli corrupt --model " + names[static_cast<int>(model.kind)] + " --e " + e +
                      " --seed " + std::to_string(s) + " | ocdna-cli decode\n");
        }
    }
    std::ostringstream os;
    os << "code: " << codec->spec().to_string() << '\n';
    os << "model: " << model.describe() << '\n';
    os << "mode: " << (o.exhaustive ? "exhaustive" : "sampled") << '\n';
    os << "messages: " << messages << '\n';
    os << "patterns: " << patterns << '\n';
    os << "passed: " << passed << '\n';
    os << "failed: " << patterns - passed << '\n';
    os << first_failure;
    emit(o, out, os.str());
    return 0;
}

void add_code_options(CLI::App* app, Options& o) {
    app->add_option("--family", o.family, "code family: c1d c2d c3d c4d cong-binary cong-q1 cong-qt doll lme1 c1s c2s");
    app->add_option("--spec", o.spec_file, "file holding key=value code parameters");
    app->add_option("--q", o.q, "symbols per row");
    app->add_option("--k", o.k, "rows (resolution)");
    app->add_option("--n", o.n, "block length (c1d, congruence, doll, lme1)");
    app->add_option("--m", o.m, "payload length (c2d c3d c4d c1s c2s)");
    app->add_option("--t", o.t, "affected rows");
    app->add_option("--a", o.a, "congruence targets, comma separated");
    app->add_option("--p", o.p, "prime modulus");
    app->add_option("--p1", o.p1, "first prime (c1s)");
    app->add_option("--p2", o.p2, "second prime (c1s)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Codes for the ordered composite DNA channel"};
    app.require_subcommand(1);

    auto* encode = app.add_subcommand("encode", "encode a message given as comma-separated ranks");
    add_code_options(encode, o);
    encode->add_option("--message", o.message, "message ranks, comma separated");
    encode->add_option("--in", o.in, "file holding the message line (default stdin)");
    encode->add_option("--out", o.out, "output file (default stdout)");
    encode->add_option("--format", o.format, "matrix or ranks");

    auto* decode = app.add_subcommand("decode", "decode received rows; prints the message ranks");
    add_code_options(decode, o);
    decode->add_option("--in", o.in, "received rows file (default stdin)");
    decode->add_option("--out", o.out, "output file (default stdout)");
    decode->add_flag("--word", o.print_word, "print the decoded codeword instead of the message");
    decode->add_option("--format", o.format, "matrix or ranks, with --word");

    auto* contains = app.add_subcommand("contains", "test codeword membership; prints true or false");
    add_code_options(contains, o);
    contains->add_option("--in", o.in, "word file (default stdin)");
    contains->add_option("--out", o.out, "output file (default stdout)");

    auto* corrupt = app.add_subcommand("corrupt", "pass a word through a channel model");
    corrupt->add_option("--in", o.in, "word file (default stdin)");
    corrupt->add_option("--out", o.out, "output file (default stdout)");
    corrupt->add_option("--model", o.model, "sub-per-row sub-total sub-t-rows del-per-row del-total del-t-rows");
    corrupt->add_option("--e", o.e, "budgets, comma separated");
    corrupt->add_option("--seed", o.seed, "random seed (default $OCDNA_SEED or 0)");
    corrupt->add_option("--plan", o.plan, "apply the edits in this file instead of sampling");
    corrupt->add_option("--plan-out", o.plan_out, "write the applied edits here");

    auto* verify = app.add_subcommand("verify-code", "brute-force check that a codebook corrects a model");
    verify->add_option("--in", o.in, "codebook file (default stdin)");
    verify->add_option("--out", o.out, "output file (default stdout)");
    verify->add_option("--model", o.model, "error model");
    verify->add_option("--e", o.e, "budgets, comma separated");

    auto* bounds = app.add_subcommand(
        "bounds", "upper bounds as CSV with columns family,q,k,n,budgets,value,floor,log10,asymptotic");
    bounds->add_option("--family", o.bound_family,
                       "sp-per-row sp-total asym-total asym-general asym-thm3-i asym-thm3-ii asym-thm3-iii "
                       "asym-even-e asym-m-gt-q gspb-deletion asym-deletion");
    bounds->add_option("--q", o.q, "symbols per row");
    bounds->add_option("--k", o.k, "rows");
    bounds->add_option("--n", o.n_list, "lengths, comma separated (one CSV row each)");
    bounds->add_option("--e", o.e, "budgets, comma separated");
    bounds->add_option("--l", o.l, "split point for asym-total (default: best)");
    bounds->add_option("--m0", o.m0, "block size for asym-m-gt-q");
    bounds->add_option("--out", o.out, "output file (default stdout)");

    auto* transform = app.add_subcommand("transform", "apply an alphabet equivalence map");
    transform->add_option("--map", o.map, "complement-reverse, shift or shift-inverse");
    transform->add_option("--in", o.in, "word or codebook file (default stdin)");
    transform->add_option("--out", o.out, "output file (default stdout)");
    transform->add_flag("--codebook", o.codebook, "input is a codebook");
    transform->add_option("--format", o.format, "matrix or ranks");

    auto* table = app.add_subcommand("table", "lookup tables as CSV: table doll --n N --k K [--q Q]");
    table->add_option("kind", o.table_kind, "table name (doll)")->required();
    table->add_option("--q", o.q, "symbols per row");
    table->add_option("--k", o.k, "rows");
    table->add_option("--n", o.n, "block length");
    table->add_option("--out", o.out, "output file (default stdout)");

    auto* roundtrip = app.add_subcommand("roundtrip", "encode, corrupt and decode; reports pass and fail counts");
    add_code_options(roundtrip, o);
    roundtrip->add_option("--trials", o.trials, "sampled messages (default 50)");
    roundtrip->add_flag("--exhaustive", o.exhaustive, "every message and every admissible error pattern");
    roundtrip->add_option("--seed", o.seed, "random seed (default $OCDNA_SEED or 0)");
    roundtrip->add_option("--out", o.out, "output file (default stdout)");

    try {
        o.seed = default_seed();
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (encode->parsed()) return do_encode(o, out);
        if (decode->parsed()) return do_decode(o, out);
        if (contains->parsed()) return do_contains(o, out);
        if (corrupt->parsed()) return do_corrupt(o, out);
        if (verify->parsed()) return do_verify(o, out);
        if (bounds->parsed()) return do_bounds(o, out);
        if (transform->parsed()) return do_transform(o, out);
        if (table->parsed()) return do_table(o, out);
        if (roundtrip->parsed()) return do_roundtrip(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DecodeError& e) {
        err << "decode failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace ocdna::cli
