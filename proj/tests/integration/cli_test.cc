// Copyright 2026 The Epicorpus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <httplib.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <sstream>

#include "cli/cli.h"
#include "doctest.h"
#include "epicorpus/common/text_util.h"
#include "epicorpus/corpus/json.h"

namespace epicorpus {
namespace {

namespace fs = std::filesystem;

const std::string kCorpus = EPICORPUS_FIXTURES "/corpus";
const std::string kAnnotation = EPICORPUS_FIXTURES "/annotation";

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "epicorpus");
  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun run;
  run.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

// A fresh scratch directory per test case.
fs::path Scratch(const std::string &name) {
  fs::path dir = fs::temp_directory_path() / ("epicorpus_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST_CASE("usage and errors") {
  CHECK(Cli({"--help"}).code == kExitOk);
  CliRun run = Cli({});
  CHECK(run.code == kExitUsage);
  CHECK(run.err.rfind("error: usage_error: ", 0) == 0);
  CHECK(Cli({"stats", "--bogus"}).code == kExitUsage);
  CHECK(Cli({"stats", "--in", "/no/such/dir"}).code == kExitUsage);
  run = Cli({"freq", "--in", kCorpus, "--pos", "colour"});
  CHECK(run.code == kExitFailure);
  CHECK(run.err == "error: invalid_argument: unknown POS class 'colour'\n");
}

TEST_CASE("pipeline and index builds are re-runnable") {
  fs::path dir = Scratch("rerun");
  REQUIRE(Cli({"pipeline", "run", "--in", kCorpus, "--out", (dir / "a").string()}).code ==
          kExitOk);
  REQUIRE(Cli({"--jobs", "3", "pipeline", "run", "--in", kCorpus, "--out",
               (dir / "b").string()})
              .code == kExitOk);
  for (const char *id : {"bombay-1897", "glasgow-1900", "hongkong-1894"}) {
    std::string name = std::string(id) + ".json";
    CHECK(ReadFile(dir / "a" / name) == ReadFile(dir / "b" / name));
  }

  REQUIRE(Cli({"index", "build", "--in", kCorpus, "--out", (dir / "i1").string(),
               "--exclude-tables"})
              .code == kExitOk);
  REQUIRE(Cli({"index", "build", "--in", (dir / "a").string(), "--out",
               (dir / "i2").string()})
              .code == kExitOk);
  for (const char *file : {"manifest.json", "documents.jsonl", "postings.tsv"}) {
    CHECK(ReadFile(dir / "i1" / file) == ReadFile(dir / "i2" / file));
  }
  CliRun run = Cli({"index", "build", "--in", kCorpus, "--out", (dir / "i3").string(),
                    "--include-tables"});
  REQUIRE(run.code == kExitOk);
  CHECK(ReadFile(dir / "i3" / "manifest.json") != ReadFile(dir / "i1" / "manifest.json"));
  CHECK(ReadFile(dir / "i3" / "postings.tsv").find("mortality\t") != std::string::npos);
  CHECK(ReadFile(dir / "i1" / "postings.tsv").find("mortality\t") == std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("annotation subcommands") {
  fs::path dir = Scratch("ann");
  WriteFile(dir / "bad.txt", "Causes and treatment text here.\n");
  WriteFile(dir / "bad.ann", "T1\tcauses 0 15\tx\nT2\ttreatment 10 30\ty\n");
  CliRun run = Cli({"ann", "validate", (dir / "bad.ann").string()});
  CHECK(run.code == kExitFailure);
  CHECK(run.out.find("violation: partial-zone-overlap:") != std::string::npos);

  WriteFile(dir / "oob.ann", "T1\tcauses 0 99\tx\n");
  run = Cli({"ann", "validate", (dir / "oob.ann").string(), "--text",
             (dir / "bad.txt").string()});
  CHECK(run.code == kExitFailure);
  CHECK(run.err.rfind("error: out_of_bounds: ", 0) == 0);
  CHECK(std::count(run.err.begin(), run.err.end(), '\n') == 1);

  std::string ann = kAnnotation + "/report.ann";
  std::string text = kAnnotation + "/report.txt";
  CHECK(Cli({"ann", "validate", ann}).code == kExitOk);
  REQUIRE(Cli({"ann", "import", "--text", text, "--ann", ann, "--out",
               (dir / "r.json").string()})
              .code == kExitOk);
  REQUIRE(Cli({"ann", "export", "--in", (dir / "r.json").string(), "--out",
               (dir / "r.ann").string(), "--text-out", (dir / "r.txt").string()})
              .code == kExitOk);
  CHECK(ReadFile(dir / "r.ann") == ReadFile(ann));
  CHECK(ReadFile(dir / "r.txt") == ReadFile(text));
  fs::remove_all(dir);
}

TEST_CASE("analytics subcommands") {
  CliRun run = Cli({"stats", "--in", kCorpus, "--json"});
  REQUIRE(run.code == kExitOk);
  Json stats = Json::parse(run.out);
  CHECK(stats["total_words"] == 41);
  CHECK(stats["total_sentences"] == 7);
  CHECK(stats["histogram"]["<=5K"] == 3);

  run = Cli({"ratio", "--in", kCorpus, "--a", "rats", "--b", "plague", "--json"});
  REQUIRE(run.code == kExitOk);
  Json ratio = Json::parse(run.out);
  CHECK(ratio["count_a"] == 1);
  CHECK(ratio["count_b"] == 3);
  run = Cli({"ratio", "--in", kCorpus});
  CHECK(run.out.find("undefined") != std::string::npos);

  std::vector<std::string> topics = {"topics", "--in",   kCorpus, "--zone", "causes",
                                     "--years", "1894:1896", "--k", "2", "--seed", "7"};
  run = Cli(topics);
  CHECK(run.code == kExitFailure);
  CHECK(run.err.rfind("error: empty_selection: ", 0) == 0);
  topics[6] = "1894:1900";
  CliRun first = Cli(topics), second = Cli(topics);
  CHECK(first.code == kExitOk);
  CHECK(first.out == second.out);
  CHECK(first.out.find("topic 1:") != std::string::npos);
}

TEST_CASE("config files supply options") {
  fs::path dir = Scratch("config");
  WriteFile(dir / "epicorpus.ini", "jobs=2\n[ratio]\na=rats\nb=plague\njson=true\n");
  CliRun run = Cli({"--config", (dir / "epicorpus.ini").string(), "ratio", "--in", kCorpus});
  REQUIRE(run.code == kExitOk);
  CHECK(Json::parse(run.out)["count_a"] == 1);
  // Flags win over the file.
  run = Cli({"--config", (dir / "epicorpus.ini").string(), "ratio", "--in", kCorpus,
             "--a", "houses"});
  CHECK(Json::parse(run.out)["count_a"] == 1);
  CHECK(Json::parse(run.out)["count_b"] == 3);
  fs::remove_all(dir);
}

TEST_CASE("serve answers health checks and stops on SIGTERM") {
  fs::path dir = Scratch("serve");
  REQUIRE(Cli({"index", "build", "--in", kCorpus, "--out", (dir / "idx").string()})
              .code == kExitOk);
  // PORT and CORS_ORIGIN from the environment override the file.
  WriteFile(dir / "serve.ini",
            "[serve]\nport = 1\ncors-origin = http://file.example\n"
            "reload-seconds = 0\n");
  int pipe_fds[2];
  REQUIRE(pipe(pipe_fds) == 0);
  pid_t pid = fork();
  REQUIRE(pid >= 0);
  if (pid == 0) {
    dup2(pipe_fds[1], STDOUT_FILENO);
    close(pipe_fds[0]);
    setenv("PORT", "0", 1);
    setenv("INDEX_DIR", (dir / "idx").c_str(), 1);
    setenv("CORS_ORIGIN", "http://env.example", 1);
    std::string config = (dir / "serve.ini").string();
    execl(EPICORPUS_CLI_BINARY, "epicorpus", "--config", config.c_str(), "serve",
          "--host", "127.0.0.1", static_cast<char *>(nullptr));
    _exit(127);
  }
  close(pipe_fds[1]);
  std::string line;
  char c = 0;
  while (read(pipe_fds[0], &c, 1) == 1 && c != '\n') line += c;
  auto colon = line.rfind(':');
  REQUIRE(colon != std::string::npos);
  int port = std::stoi(line.substr(colon + 1));

  httplib::Client client("127.0.0.1", port);
  auto res = client.Get("/healthz");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(Json::parse(res->body)["documents"] == 3);
  CHECK(res->get_header_value("Access-Control-Allow-Origin") == "http://env.example");

  kill(pid, SIGTERM);
  int status = 0;
  waitpid(pid, &status, 0);
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  close(pipe_fds[0]);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace epicorpus
