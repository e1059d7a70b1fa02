#include <gtest/gtest.h>

#include <random>

#include "shiner/config.hpp"

using namespace shiner;

TEST(ParseConfig, BenchmarkParameterSet) {
  const auto c = parse_config("c1 = 0.1\nc2 = 0.1\nr = 0.2\nw = 20\ns = 0.08");
  EXPECT_EQ(c.params.c1, 0.1);
  EXPECT_EQ(c.params.c2, 0.1);
  EXPECT_EQ(c.params.r, 0.2);
  EXPECT_EQ(c.params.w, 20.0);
  EXPECT_EQ(c.params.s, 0.08);
  EXPECT_EQ(c, RunConfig{});
}

TEST(ParseConfig, EmptyTextGivesDefaults) {
  const auto c = parse_config("");
  EXPECT_EQ(c, RunConfig{});
  EXPECT_EQ(c.params.n_nodes, 100u);
  EXPECT_EQ(c.region, (Box{-0.5, -0.5, 0.5, 0.5}));
  EXPECT_EQ(c.params.rho, Position(0, 0));
  EXPECT_EQ(c.params.mode(), Mode::kBoth);
  EXPECT_FALSE(c.params.sigma_const.has_value());
}

TEST(ParseConfig, CommentsBlankLinesAndWhitespace) {
  const auto c = parse_config("# header\n\n  seed=9   # trailing\r\nmode = social\n\t steps = 100\n");
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.params.mode(), Mode::kSocial);
  EXPECT_EQ(c.steps, 100u);
}

TEST(ParseConfig, NegativeC1CitesPositivity) {
  try {
    parse_config("seed = 1\nc1 = -1\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "c1");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("positive"), std::string::npos);
  }
}

TEST(ParseConfig, RejectsUnknownKeyAndBadValues) {
  auto expect_error = [](const char* text, const char* key, std::size_t line) {
    try {
      parse_config(text);
      ADD_FAILURE() << "no error for: " << text;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.key(), key) << text;
      EXPECT_EQ(e.line(), line) << text;
    }
  };
  expect_error("colour = red", "colour", 1);
  expect_error("\nw = lots", "w", 2);
  expect_error("steps = -3", "steps", 1);
  expect_error("mode = sideways", "mode", 1);
  expect_error("r = 0.1\ns = -0.5", "s", 2);
  expect_error("n_nodes = 0", "n_nodes", 1);
  expect_error("stride = 0", "stride", 1);
  expect_error("c2 = 0", "c2", 1);
  expect_error("just words", "just words", 1);
  expect_error("seed =", "seed", 1);
}

TEST(ParseConfig, EmitRoundTrip) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> pos(1e-6, 10.0), any(-10.0, 10.0);
  std::uniform_int_distribution<int> mode(0, 3), flip(0, 1);
  for (int k = 0; k < 500; ++k) {
    RunConfig c;
    c.params.n_nodes = 1 + static_cast<std::size_t>(pos(gen) * 100);
    c.params.c1 = pos(gen);
    c.params.c2 = pos(gen);
    c.params.r = pos(gen);
    c.params.w = pos(gen);
    c.params.s = pos(gen);
    c.params.rho = {any(gen), any(gen)};
    c.params.set_mode(static_cast<Mode>(mode(gen)));
    if (flip(gen)) c.params.sigma_const = pos(gen);
    c.seed = gen();
    c.steps = static_cast<std::size_t>(pos(gen) * 1000);
    c.stride = 1 + static_cast<std::size_t>(pos(gen) * 10);
    c.region = {-pos(gen), -pos(gen), pos(gen), pos(gen)};
    c.eps = pos(gen);
    c.out_dir = "runs/out_" + std::to_string(k);
    EXPECT_EQ(parse_config(emit_config(c)), c) << emit_config(c);
  }
}

TEST(ApplyConfigValue, OverridesReplaceFileValues) {
  // Defaults < file < flag, checked for each key that has a flag.
  const char* file = "seed = 5\nsteps = 12\nstride = 3\nmode = env\nout_dir = from_file\n";
  const std::pair<const char*, const char*> flags[] = {
      {"seed", "77"}, {"steps", "99"}, {"stride", "9"}, {"mode", "social"}, {"out_dir", "from_flag"}};
  const RunConfig defaults;
  const RunConfig from_file = parse_config(file);
  EXPECT_NE(from_file.seed, defaults.seed);
  EXPECT_NE(from_file.steps, defaults.steps);
  for (const auto& [key, value] : flags) {
    RunConfig c = from_file;
    apply_config_value(c, key, value);
    RunConfig expected = from_file;
    if (std::string(key) == "seed") expected.seed = 77;
    if (std::string(key) == "steps") expected.steps = 99;
    if (std::string(key) == "stride") expected.stride = 9;
    if (std::string(key) == "mode") expected.params.set_mode(Mode::kSocial);
    if (std::string(key) == "out_dir") expected.out_dir = "from_flag";
    EXPECT_EQ(c, expected) << key;
  }
}
