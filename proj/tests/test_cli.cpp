#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ocdna/alphabet.hpp"
#include "ocdna/codes_deletion.hpp"
#include "ocdna/text_io.hpp"

namespace fs = std::filesystem;
using namespace ocdna;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "ocdna_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream f(p);
    f << text;
}

std::string read_file(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("bounds example row") {
    const auto r = run({"bounds", "--family", "sp-total", "--q", "2", "--k", "2", "--n", "2", "--e", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "family,q,k,n,budgets,value,floor,log10,asymptotic\nsp-total,2,2,2,1,3,3,0.477121,false\n");
    const auto many = run({"bounds", "--family", "sp-per-row", "--q", "2", "--k", "3", "--n", "4,5", "--e", "1,1,1"});
    CHECK(many.code == 0);
    CHECK(many.out.find("sp-per-row,2,3,4,1;1;1,256/13,19,") != std::string::npos);
    CHECK(std::count(many.out.begin(), many.out.end(), '\n') == 3);
}

TEST_CASE("corrupt then decode restores the message") {
    const auto word = scratch("c1d_word.txt");
    const auto recv = scratch("c1d_recv.txt");
    const auto plan = scratch("c1d_plan.txt");
    auto enc = run({"encode", "--family", "c1d", "--k", "2", "--n", "4", "--message", "1,2", "--out", word.string()});
    REQUIRE(enc.code == 0);
    std::istringstream reread(read_file(word));
    const Word w = read_word(reread);
    CHECK(C1DCode(2, 4, 0).contains(w));

    auto cor = run({"corrupt", "--model", "del-per-row", "--e", "1,0", "--seed", "7", "--in", word.string(), "--out",
                    recv.string(), "--plan-out", plan.string()});
    REQUIRE(cor.code == 0);
    std::istringstream rr(read_file(recv));
    const auto received = read_received(rr);
    CHECK(received.rows[0].size() == 3);
    CHECK(received.rows[1].size() == 4);

    auto dec = run({"decode", "--family", "c1d", "--k", "2", "--n", "4", "--in", recv.string()});
    CHECK(dec.code == 0);
    CHECK(dec.out == "1,2\n");
    // The header line written by encode is enough to pick the code.
    CHECK(run({"decode", "--in", recv.string()}).out == "1,2\n");

    // Replaying the recorded plan gives the same received rows.
    auto replay = run({"corrupt", "--model", "del-per-row", "--e", "1,0", "--plan", plan.string(), "--in", word.string()});
    CHECK(replay.code == 0);
    CHECK(replay.out == read_file(recv));
}

TEST_CASE("verify-code reports a witness for a non-code") {
    const auto book = scratch("bad_book.txt");
    std::ostringstream os;
    write_codebook(os, all_words(2, 2, 1), 2, 2, 1);
    write_file(book, os.str());
    const auto r = run({"verify-code", "--model", "sub-total", "--e", "1", "--in", book.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: false") != std::string::npos);
    CHECK(r.out.find("witness-first:") != std::string::npos);
    CHECK(r.out.find("witness-second:") != std::string::npos);

    std::ostringstream good;
    write_codebook(good, {Word::from_ranks(2, 2, std::vector<int>{0})}, 2, 2, 1);
    write_file(book, good.str());
    CHECK(run({"verify-code", "--model", "sub-total", "--e", "1", "--in", book.string()}).out.find("verdict: true") !=
          std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"bounds", "--family", "nope", "--q", "2", "--k", "2", "--n", "2", "--e", "1"}).code == 2);
    CHECK(run({"encode", "--family", "c1d", "--k", "2", "--n", "4", "--message", "7,0"}).code == 1);
    const auto bad_prime = run({"roundtrip", "--family", "c2d", "--k", "2", "--t", "2", "--m", "4", "--p", "3"});
    CHECK(bad_prime.code == 1);
    CHECK(bad_prime.out.empty());
    CHECK_FALSE(bad_prime.err.empty());

    const auto bad = scratch("not_codeword.txt");
    std::ostringstream os;
    write_word(os, Word::from_ranks(2, 2, std::vector<int>{0, 2, 1}), WordFormat::Matrix);
    write_file(bad, os.str());
    CHECK(run({"decode", "--family", "c1d", "--k", "2", "--n", "3", "--in", bad.string()}).code == 1);
    auto yes = run({"contains", "--family", "c1d", "--k", "2", "--n", "3", "--in", bad.string()});
    CHECK(yes.code == 0);
    CHECK(yes.out == "false\n");
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("same arguments and seed give identical output") {
    const auto word = scratch("det_word.txt");
    REQUIRE(run({"encode", "--family", "c2s", "--q", "2", "--k", "3", "--t", "2", "--m", "3", "--message", "1,2,3", "--out",
                 word.string()})
                .code == 0);
    const std::vector<std::string> args{"corrupt", "--model", "sub-t-rows", "--e", "1,1", "--seed", "99", "--in", word.string()};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto c = run({"roundtrip", "--family", "doll", "--k", "2", "--n", "5", "--trials", "20", "--seed", "4"});
    const auto d = run({"roundtrip", "--family", "doll", "--k", "2", "--n", "5", "--trials", "20", "--seed", "4"});
    CHECK(c.out == d.out);
    CHECK(c.out.find("failed: 0") != std::string::npos);
}

TEST_CASE("roundtrip reports") {
    const auto c1d = run({"roundtrip", "--family", "c1d", "--k", "2", "--n", "4", "--exhaustive"});
    CHECK(c1d.code == 0);
    CHECK(c1d.out.find("mode: exhaustive") != std::string::npos);
    CHECK(c1d.out.find("failed: 0") != std::string::npos);
    const auto lme = run({"roundtrip", "--family", "lme1", "--k", "2", "--n", "7", "--exhaustive"});
    CHECK(lme.code == 0);
    CHECK(lme.out.find("model: sub-total(1)") != std::string::npos);
    CHECK(lme.out.find("failed: 0") != std::string::npos);
    for (const std::vector<std::string>& fam :
         {std::vector<std::string>{"--family", "c2d", "--k", "2", "--t", "2", "--m", "4"},
          {"--family", "c3d", "--q", "3", "--k", "2", "--m", "3"},
          {"--family", "c4d", "--q", "3", "--k", "2", "--t", "2", "--m", "4"},
          {"--family", "c1s", "--q", "3", "--k", "2", "--m", "3"},
          {"--family", "c2s", "--q", "2", "--k", "3", "--t", "2", "--m", "3"}}) {
        std::vector<std::string> args{"roundtrip", "--trials", "10", "--seed", "1"};
        args.insert(args.end(), fam.begin(), fam.end());
        const auto r = run(args);
        CHECK(r.code == 0);
        CHECK(r.out.find("failed: 0") != std::string::npos);
    }
}

TEST_CASE("transform and table") {
    const auto in = scratch("letter.txt");
    std::ostringstream os;
    write_word(os, Word::from_columns(2, 3, {{0, 0, 1}}), WordFormat::Matrix);
    write_file(in, os.str());
    const auto r = run({"transform", "--map", "complement-reverse", "--in", in.string()});
    CHECK(r.code == 0);
    std::istringstream back(r.out);
    CHECK(read_word(back) == Word::from_columns(2, 3, {{0, 1, 1}}));

    const auto t = run({"table", "doll", "--n", "3", "--k", "2"});
    CHECK(t.code == 0);
    CHECK(t.out.find("3,1,1,2,111") != std::string::npos);
}
