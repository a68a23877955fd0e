// Copyright 2026 The nlmotion Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the installed-layout binary as a subprocess.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <string>

#include "support/oracles.hpp"

namespace nlmotion {
namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  const std::string cmd = testing::cli_binary().string() + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, CouplingTable) {
  const fs::path dir = testing::scratch_dir("cli_coupling");
  ASSERT_EQ(run("coupling --k 1 --eta 0.25 --n-max 3 --out " + (dir / "f.csv").string()), 0);
  const std::string text = testing::slurp(dir / "f.csv");
  EXPECT_EQ(text.substr(0, 4), "n,f\n");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
  fs::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  const fs::path dir = testing::scratch_dir("cli_codes");
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("coupling --k nope"), 2);
  EXPECT_EQ(run("zones --k 1 --eta 0 --n-max 10"), 2);
  EXPECT_EQ(run("preset unknown"), 2);

  std::ofstream(dir / "bad.cfg") << "scenario = one_mode\nbogus = 1\n";
  EXPECT_EQ(run("evolve --config " + (dir / "bad.cfg").string() + " --out " +
                (dir / "out").string()),
            2);
  EXPECT_EQ(run("evolve --config " + (dir / "missing.cfg").string() + " --out " +
                (dir / "out").string()),
            3);

  std::ofstream(dir / "low.cfg")
      << "scenario = one_mode\nk = 1\neta = 0.25\nalpha_re = 3\ncutoff = 12\ntimes = 0, 1\n";
  EXPECT_EQ(run("evolve --config " + (dir / "low.cfg").string() + " --out " +
                (dir / "low").string()),
            2);
  EXPECT_EQ(run("evolve --override-cutoff --config " + (dir / "low.cfg").string() + " --out " +
                (dir / "low").string()),
            0);

  // Output directory path occupied by a regular file.
  std::ofstream(dir / "occupied") << "x";
  std::ofstream(dir / "ok.cfg")
      << "scenario = one_mode\nk = 0\neta = 0.25\nalpha_re = 1\ntimes = 0\n";
  EXPECT_EQ(run("evolve --config " + (dir / "ok.cfg").string() + " --out " +
                (dir / "occupied").string()),
            3);
  fs::remove_all(dir);
}

TEST(Cli, EvolveIsByteIdentical) {
  const fs::path dir = testing::scratch_dir("cli_repeat");
  std::ofstream(dir / "run.cfg")
      << "scenario = one_mode\nk = 1\neta = 0.25\nalpha_re = 0\nalpha_im = 2\n"
         "times = 0, 2.5\noutputs = observables, qgrid, zones\nqgrid_step = 0.2\n";
  const std::string cfg = (dir / "run.cfg").string();
  ASSERT_EQ(run("evolve --config " + cfg + " --out " + (dir / "a").string()), 0);
  ASSERT_EQ(run("evolve --workers 3 --config " + cfg + " --out " + (dir / "b").string()), 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir / "a")) {
    const fs::path other = dir / "b" / entry.path().filename();
    ASSERT_TRUE(fs::exists(other)) << other;
    EXPECT_EQ(testing::slurp(entry.path()), testing::slurp(other)) << entry.path();
    ++files;
  }
  EXPECT_EQ(files, 5u);
  fs::remove_all(dir);
}

TEST(Cli, PresetPrintsParsableConfig) {
  const fs::path dir = testing::scratch_dir("cli_preset");
  ASSERT_EQ(run("preset parametric --out " + (dir / "p.cfg").string()), 0);
  ASSERT_EQ(run("evolve --config " + (dir / "p.cfg").string() + " --out " +
                (dir / "out").string()),
            0);
  EXPECT_TRUE(fs::exists(dir / "out" / "summary.json"));
  fs::remove_all(dir);
}

}  // namespace
}  // namespace nlmotion
