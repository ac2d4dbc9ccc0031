#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "support.hpp"
#include "vfenrich/text.hpp"

namespace fs = std::filesystem;
using testing::run;

namespace {

std::string data(const std::string& rel) { return (testing::data_dir() / rel).string(); }

std::string base() {
  return testing::cli() + " enrich --lexicon " + data("lexicon.json") + " --ne-config " +
         data("ne_config.json");
}

fs::path temp_dir(const std::string& name) {
  auto d = fs::temp_directory_path() / ("vfenrich_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("help documents every flag") {
  auto enrich = run(testing::cli() + " enrich --help");
  CHECK(enrich.status == 0);
  for (const char* flag : {"--lexicon", "--corpus", "--verb", "--scope-window", "--no-adjunct-filter",
                           "--min-evidence", "--pretagged", "--grammar", "--ne-config", "--format",
                           "--out", "--jobs"})
    CHECK_MESSAGE(enrich.out.find(flag) != std::string::npos, flag);
  auto chunk = run(testing::cli() + " chunk --help");
  for (const char* flag : {"--lexicon", "--corpus", "--pretagged", "--grammar", "--ne-config", "--out", "--jobs"})
    CHECK_MESSAGE(chunk.out.find(flag) != std::string::npos, flag);
  auto top = run(testing::cli() + " --help");
  for (const char* sub : {"enrich", "chunk", "lexinfo"}) CHECK(top.out.find(sub) != std::string::npos);
}

TEST_CASE("golden report") {
  auto r = run(base() + " --corpus " + data("corpus/kollidieren") + " --verb kollidieren 2>/dev/null");
  CHECK(r.status == 0);
  CHECK(r.out == testing::read_file(testing::data_dir() / "golden/kollidieren.json"));
}

TEST_CASE("unknown verb") {
  auto r = run(base() + " --corpus " + data("corpus/kollidieren") + " --verb schwimmen 2>&1 >/dev/null");
  CHECK(r.status == 0);
  CHECK(r.out.find("not in the lexicon") != std::string::npos);
  auto j = nlohmann::json::parse(
      run(base() + " --corpus " + data("corpus/kollidieren") + " --verb schwimmen 2>/dev/null").out);
  CHECK(j["occurrences_examined"] == 0);
  CHECK(j["pattern"].is_null());
  CHECK(!j["warnings"].empty());
}

TEST_CASE("adjunct filter flag") {
  const std::string cmd = base() + " --corpus " + data("corpus") + " --verb kollidieren";
  auto on = nlohmann::json::parse(run(cmd + " 2>/dev/null").out);
  auto off = nlohmann::json::parse(run(cmd + " --no-adjunct-filter 2>/dev/null").out);
  CHECK(on["preposition_counts"]["mit"] == off["preposition_counts"]["mit"]);
  CHECK_FALSE(on["preposition_counts"].contains("an"));
  CHECK(off["preposition_counts"]["an"] == 1);
}

TEST_CASE("all verbs, formats and min-evidence") {
  const std::string cmd = base() + " --corpus " + data("corpus");
  auto r = run(cmd + " --format text 2>/dev/null");
  CHECK(r.status == 0);
  for (const char* v : {"befahren", "kollidieren", "versterben"}) CHECK(r.out.find(v) != std::string::npos);
  CHECK(r.out.find("operieren") == std::string::npos);
  auto tsv = run(cmd + " --format tsv --verb kollidieren 2>/dev/null");
  CHECK(tsv.out.rfind("verb\tsentence", 0) == 0);
  CHECK(tsv.out.find("NN=er | Pp=mit feststehenden Gegenständen") != std::string::npos);
  auto strict = nlohmann::json::parse(run(cmd + " --verb versterben --min-evidence 5 2>/dev/null").out);
  CHECK(strict["elements"][0]["status"] == "insufficient-evidence");
  // min-evidence also drops rare verbs from the default selection
  auto rare = run(cmd + " --min-evidence 3 --format text 2>/dev/null");
  CHECK(rare.out.find("versterben") == std::string::npos);
  CHECK(rare.out.find("kollidieren") != std::string::npos);
}

TEST_CASE("scope window flag") {
  auto j = nlohmann::json::parse(
      run(base() + " --corpus " + data("corpus/kollidieren") + " --verb kollidieren --scope-window 2 2>/dev/null").out);
  CHECK(j["preposition_counts"]["mit"] == 7);
}

TEST_CASE("chunk dump") {
  auto r = run(testing::cli() + " chunk --lexicon " + data("lexicon.json") + " --corpus " +
               data("corpus/kollidieren/s2.txt"));
  CHECK(r.status == 0);
  CHECK(r.out.find("s2.txt#0\t1\tNP\t1\t3\tsein LKW\tnom,acc\t-\tLKW\n") != std::string::npos);
  CHECK(r.out.find("PP\t4\t7\tmit dem PKW\tdat\tmit\tPKW\n") != std::string::npos);

  auto dir = temp_dir("empty");
  std::ofstream(dir / "empty.txt").close();
  auto e = run(testing::cli() + " chunk --lexicon " + data("lexicon.json") + " --corpus " + (dir / "empty.txt").string());
  CHECK(e.status == 0);
  CHECK(e.out == "sentence\tcoverings\tkind\tbegin\tend\tsurface\tcases\tpreposition\thead\n");
}

TEST_CASE("pretagged input gives the same chunks") {
  auto dir = temp_dir("pretagged");
  const auto& lex = testing::toy_lexicon();
  for (const auto& e : fs::directory_iterator(testing::data_dir() / "corpus/kollidieren")) {
    auto sents = vfe::preprocess_document(testing::read_file(e.path()), "x", lex, testing::toy_ne());
    std::ofstream out(dir / (e.path().stem().string() + ".tsv"));
    vfe::write_pretagged(out, sents);
  }
  const std::string common = testing::cli() + " chunk --lexicon " + data("lexicon.json") +
                             " --ne-config " + data("ne_config.json");
  auto raw = run(common + " --corpus " + data("corpus/kollidieren"));
  auto tagged = run(common + " --pretagged --corpus " + dir.string());
  auto strip = [](std::string s) {
    for (std::size_t p; (p = s.find(".txt#")) != std::string::npos;) s.replace(p, 4, "");
    for (std::size_t p; (p = s.find(".tsv#")) != std::string::npos;) s.replace(p, 4, "");
    return s;
  };
  CHECK(tagged.status == 0);
  CHECK(strip(raw.out) == strip(tagged.out));

  auto enrich_raw = run(base() + " --corpus " + data("corpus/kollidieren") + " --verb kollidieren 2>/dev/null");
  auto enrich_tagged = run(base() + " --pretagged --corpus " + dir.string() + " --verb kollidieren 2>/dev/null");
  CHECK(strip(enrich_raw.out) == strip(enrich_tagged.out));
}

TEST_CASE("lexinfo") {
  const std::string cmd = testing::cli() + " lexinfo --lexicon " + data("lexicon.json");
  auto v = run(cmd + " versterben");
  CHECK(v.status == 0);
  CHECK(v.out.find("frames    NN.BT") != std::string::npos);
  auto p = run(cmd + " PKW");
  CHECK(p.out.find("pkw-1 > fahrzeug-1 [vehicle]") != std::string::npos);
  CHECK(run(cmd + " qqqq 2>/dev/null").status == 1);
}

TEST_CASE("exit codes") {
  CHECK(run(testing::cli() + " enrich --corpus " + data("corpus") + " 2>/dev/null").status == 1);
  CHECK(run(testing::cli() + " enrich --lexicon /nonexistent.json --corpus " + data("corpus") + " 2>/dev/null").status == 1);
  CHECK(run(base() + " --corpus " + data("corpus") + " --scope-window 0 2>/dev/null").status == 1);
  CHECK(run(base() + " --corpus " + data("corpus") + " --format xml 2>/dev/null").status == 1);
  CHECK(run(testing::cli() + " 2>/dev/null").status == 1);

  auto dir = temp_dir("broken");
  std::ofstream(dir / "lex.json") << R"({"synsets": [{"id": "a", "pos": "noun", "lemmas": ["A"], "hypernyms": ["zz"]}], "verbs": []})";
  auto r = run(testing::cli() + " enrich --lexicon " + (dir / "lex.json").string() + " --corpus " +
               data("corpus") + " 2>&1");
  CHECK(r.status == 2);
  CHECK(r.out.find("zz") != std::string::npos);
  std::ofstream(dir / "bad.json") << "{\n  \"synsets\": [,\n";
  auto b = run(testing::cli() + " enrich --lexicon " + (dir / "bad.json").string() + " --corpus " +
               data("corpus") + " 2>&1");
  CHECK(b.status == 2);
  CHECK(b.out.find("line 2") != std::string::npos);
}

TEST_CASE("out dir and determinism across job counts") {
  auto one = temp_dir("jobs1");
  auto four = temp_dir("jobs4");
  const std::string cmd = base() + " --corpus " + data("corpus");
  CHECK(run(cmd + " --jobs 1 --out " + one.string() + " 2>/dev/null").status == 0);
  CHECK(run(cmd + " --jobs 4 --out " + four.string() + " 2>/dev/null").status == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(one)) {
    ++files;
    CHECK(testing::read_file(e.path()) == testing::read_file(four / e.path().filename()));
  }
  CHECK(files == 3);
  auto golden = testing::read_file(testing::data_dir() / "golden/kollidieren.json");
  auto single = temp_dir("single");
  run(base() + " --corpus " + data("corpus/kollidieren") + " --verb kollidieren --out " + single.string() + " 2>/dev/null");
  CHECK(testing::read_file(single / "kollidieren.json") == golden);
  CHECK(run(cmd + " --jobs 3 2>/dev/null").out == run(cmd + " 2>/dev/null").out);
}
