// Drives the installed binary end to end: argument parsing, exit codes and
// the bytes it writes. argv[1] is the path to the executable.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool cond, const std::string& what) {
  if (cond) {
    std::printf("[PASS] %s\n", what.c_str());
  } else {
    std::printf("[FAIL] %s\n", what.c_str());
    ++failures;
  }
}

int run(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  if (WIFEXITED(rc)) return WEXITSTATUS(rc);
  return -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const std::string& text) {
  std::size_t n = 0;
  for (char ch : text) {
    if (ch == '\n') ++n;
  }
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_integration <path-to-binary>\n");
    return 1;
  }
  const std::string bin = std::string("\"") + argv[1] + "\"";
  const fs::path dir =
      fs::temp_directory_path() / ("fde_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto file = [&](const char* name) { return (dir / name).string(); };

  check(run(bin + " --help > /dev/null 2>&1") == 0, "--help exits 0");
  check(run(bin + " solve --no-such-flag > /dev/null 2>&1") == 1,
        "unknown flag exits 1");
  check(run(bin + " > /dev/null 2>&1") == 1, "missing subcommand exits 1");
  check(run(bin + " solve --h -0.5 --output " + file("bad.csv") +
            " > /dev/null 2>&1") == 1,
        "invalid step size exits 1");

  {
    const std::string out = file("trap.csv");
    const int rc = run(bin +
                       " solve --scheme pi-trap --alpha 0.8 --lambda -2 --y0 2"
                       " --h 0.0625 --t-max 4 --output " + out);
    check(rc == 0, "pi-trap solve exits 0");
    const std::string csv = slurp(out);
    check(line_count(csv) == 66, "pi-trap solve writes 65 rows plus header");
    check(csv.rfind("n,t,y_numeric,y_exact,abs_error\n", 0) == 0,
          "solve CSV header matches");
  }

  {
    const int rc = run(bin + " solve --scheme flawed --t-max 8 --output " +
                       file("flawed.csv"));
    check(rc == 2, "flawed solve past the onset exits 2");
  }

  {
    const std::string a = file("fig1_a.csv");
    const std::string b = file("fig1_b.csv");
    check(run(bin + " reproduce fig1 --output " + a) == 0, "reproduce fig1 exits 0");
    check(run(bin + " reproduce fig1 --output " + b) == 0, "second reproduce exits 0");
    const std::string ca = slurp(a);
    check(!ca.empty() && ca == slurp(b), "reproduce fig1 is byte-identical");
    check(ca.rfind("t,y_exact,y_flawed\n0,2,2\n", 0) == 0,
          "fig1 starts from the shared initial value");
  }

  {
    const std::string out = file("fig2.csv");
    check(run(bin + " reproduce fig2 --output " + out) == 0, "reproduce fig2 exits 0");
    check(slurp(out).rfind("t,abs_error\n0,0\n", 0) == 0, "fig2 starts at zero error");
  }

  {
    const std::string out = file("conv.csv");
    const int rc = run(bin +
                       " convergence --scheme pi-trap"
                       " --h-list 0.0625,0.03125,0.015625,0.0078125 --output " + out);
    check(rc == 0, "convergence exits 0");
    check(line_count(slurp(out)) == 5, "convergence writes 4 rows plus header");
    check(run(bin + " convergence --scheme pi-trap --h-list 0.1,0.06 --output " +
              file("badconv.csv") + " > /dev/null 2>&1") == 1,
          "non-halving step list exits 1");
  }

  {
    const std::string out = file("memory.csv");
    const int rc = run(bin + " short-memory-study --windows 4,16,64,full --output " + out);
    check(rc == 0, "short-memory-study exits 0");
    const std::string csv = slurp(out);
    check(line_count(csv) == 5, "short-memory-study writes 4 rows plus header");
    check(csv.find("\nfull,") != std::string::npos, "full-history row present");
  }

  std::error_code ec;
  fs::remove_all(dir, ec);

  if (failures == 0) {
    std::printf("cli integration: all checks passed\n");
  } else {
    std::printf("cli integration: %d check(s) failed\n", failures);
  }
  return failures;
}
