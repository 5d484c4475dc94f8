#include "doctest.h"
#include "gridlsh/numeric.hpp"
#include "test_util.hpp"

#include <cstdio>
#include <string>

using namespace gridlsh;
using testutil::run_cli;
using testutil::write_file;

TEST_CASE("sample-interval matches the documented example") {
  auto r = run_cli("sample-interval --hash 1,0@13 --lo 3 --hi 7 --k 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3,3\n4,4\n5,5\n");
  auto o = run_cli("sample-interval --hash 1,0@13 --lo 3 --hi 7 --k 3 --oracle");
  CHECK(o.out == r.out);
}

TEST_CASE("identical argv produces identical bytes") {
  std::string cmd = "sample-rect --seed 99 --p 499 --rect 5,400,9,444";
  auto a = run_cli(cmd);
  auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("exit codes distinguish validation and precondition failures") {
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("sample-interval --lo 3 --hi 7").exit_code == 1);  // no k/tau
  // hi >= p is a module precondition violation, in both implementations.
  CHECK(run_cli("sample-interval --seed 1 --p 13 --lo 3 --hi 20 --k 2").exit_code == 2);
  CHECK(run_cli("sample-interval --seed 1 --p 13 --lo 3 --hi 20 --k 2 --oracle").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("sample-interval --help").exit_code == 0);
}

TEST_CASE("differential oracle fuzzing over sampler subcommands") {
  SeededRng rng(2025);
  const u64 primes[] = {13, 101, 499, 1009};
  for (int iter = 0; iter < 40; ++iter) {
    u64 p = primes[rng.next_below(4)];
    u64 seed = rng.next_u64() % 100000;
    char buf[256];
    if (iter % 2 == 0) {
      i64 lo = static_cast<i64>(rng.next_below(p - 1));
      i64 hi = lo + static_cast<i64>(rng.next_below(p - static_cast<u64>(lo)));
      if (rng.next_below(2) == 0) {
        std::snprintf(buf, sizeof(buf),
                      "sample-interval --seed %llu --p %llu --lo %lld --hi %lld --k %llu",
                      (unsigned long long)seed, (unsigned long long)p, (long long)lo,
                      (long long)hi, (unsigned long long)rng.next_below(20));
      } else {
        std::snprintf(buf, sizeof(buf),
                      "sample-interval --seed %llu --p %llu --lo %lld --hi %lld --tau %llu",
                      (unsigned long long)seed, (unsigned long long)p, (long long)lo,
                      (long long)hi, (unsigned long long)rng.next_below(p / 3 + 1));
      }
    } else {
      i64 x_lo = static_cast<i64>(rng.next_below(p - 1));
      i64 x_hi = x_lo + static_cast<i64>(rng.next_below(std::min<u64>(p - x_lo, 80)));
      i64 y_lo = static_cast<i64>(rng.next_below(p - 1));
      i64 y_hi = y_lo + static_cast<i64>(rng.next_below(std::min<u64>(p - y_lo, 80)));
      std::snprintf(buf, sizeof(buf),
                    "sample-rect --seed %llu --p %llu --rect %lld,%lld,%lld,%lld",
                    (unsigned long long)seed, (unsigned long long)p, (long long)x_lo,
                    (long long)x_hi, (long long)y_lo, (long long)y_hi);
    }
    auto fast = run_cli(buf);
    auto slow = run_cli(std::string(buf) + " --oracle");
    CHECK(fast.exit_code == 0);
    CHECK(fast.out == slow.out);
  }
}

TEST_CASE("hash subcommands are deterministic and validate inputs") {
  write_file("/tmp/gridlsh_h1.json", "{\"weights\": [4, 0, 3, 2]}");
  auto a = run_cli("hash-histogram --seed 5 --eps 0.2 --input /tmp/gridlsh_h1.json");
  auto b = run_cli("hash-histogram --seed 5 --eps 0.2 --input /tmp/gridlsh_h1.json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.substr(0, 5) == "hash=");

  write_file("/tmp/gridlsh_poly.json",
             "{\"vertices\": [[60,60],[430,80],[440,420],[70,450]]}");
  auto c = run_cli("hash-polygon --seed 5 --eps 0.5 --phi 0.2 --alpha 0.5 --grid 512 "
                   "--input /tmp/gridlsh_poly.json");
  CHECK(c.exit_code == 0);
  CHECK(c.out.substr(0, 5) == "hash=");

  write_file("/tmp/gridlsh_bad.json", "{\"vertices\": [[0,0],[4,4],[4,0],[0,4]]}");
  auto d = run_cli("hash-polygon --seed 5 --eps 0.5 --phi 0.2 --grid 512 "
                   "--input /tmp/gridlsh_bad.json");
  CHECK(d.exit_code == 1);  // rejected as non-simple at ingestion
}

TEST_CASE("summary build and queries round-trip through a file") {
  write_file("/tmp/gridlsh_p0.json",
             "{\"vertices\": [[40,40],[240,40],[240,240],[40,240]]}");
  write_file("/tmp/gridlsh_p1.json",
             "{\"vertices\": [[160,150],[370,150],[370,360],[160,360]]}");
  auto built = run_cli("build-summary --phi 0.25 --eps 0.2 --delta 0.2 --seed 31 "
                       "--grid 420 --out /tmp/gridlsh_sum.bin /tmp/gridlsh_p0.json "
                       "/tmp/gridlsh_p1.json");
  CHECK(built.exit_code == 0);

  auto u = run_cli("query-union --summary /tmp/gridlsh_sum.bin --ids 0,1");
  CHECK(u.exit_code == 0);
  CHECK(u.out.find("estimate=") == 0);
  CHECK(u.out.find("level=") != std::string::npos);
  CHECK(u.out.find("prime=") != std::string::npos);
  CHECK(u.out.find("samples=") != std::string::npos);

  auto i = run_cli("query-intersection --summary /tmp/gridlsh_sum.bin --ids 0,1");
  CHECK(i.exit_code == 0);
  CHECK(i.out.find("estimate=") == 0);

  CHECK(run_cli("query-union --summary /tmp/gridlsh_sum.bin --ids 7").exit_code == 2);

  // Without --grid the square is derived from the dilations.
  auto auto_grid = run_cli("build-summary --phi 0.25 --eps 0.2 --delta 0.2 --seed 31 "
                           "--out /tmp/gridlsh_sum2.bin /tmp/gridlsh_p0.json "
                           "/tmp/gridlsh_p1.json");
  CHECK(auto_grid.exit_code == 0);
  auto u2 = run_cli("query-union --summary /tmp/gridlsh_sum2.bin --ids 0,1");
  CHECK(u2.exit_code == 0);
}

TEST_CASE("experiment drivers emit CSV and a verdict") {
  write_file("/tmp/gridlsh_hx.json", "{\"weights\": [2, 1, 0]}");
  write_file("/tmp/gridlsh_hy.json", "{\"weights\": [0, 1, 2]}");
  auto c = run_cli("experiment collision --type histogram --trials 400 --seed 9 "
                   "--eps 0.1 --input-a /tmp/gridlsh_hx.json --input-b /tmp/gridlsh_hy.json");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("trial,value\n0,") == 0);
  CHECK(c.out.find("rate=") != std::string::npos);
  CHECK(c.out.find("verdict=") != std::string::npos);

  auto e = run_cli("experiment estimator --trials 500 --seed 4 --p 101 --mu 10000 "
                   "--eps 0.5 --no-csv");
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("failure_rate=") == 0);
  CHECK(e.out.find("bound=0.0404") != std::string::npos);

  // Weight mismatch violates the equal-weight hypothesis.
  write_file("/tmp/gridlsh_hz.json", "{\"weights\": [9, 9]}");
  auto bad = run_cli("experiment collision --type histogram --trials 10 --seed 9 "
                     "--eps 0.1 --input-a /tmp/gridlsh_hx.json --input-b /tmp/gridlsh_hz.json");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("set and polygon collision experiments run end to end") {
  std::string pts_a = "{\"points\": [";
  std::string pts_b = "{\"points\": [";
  for (int i = 0; i < 600; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s[%d,%d]", i ? "," : "", i / 30, i % 30);
    pts_a += buf;
    std::snprintf(buf, sizeof(buf), "%s[%d,%d]", i ? "," : "", i / 30 + 5, i % 30);
    pts_b += buf;
  }
  pts_a += "]}";
  pts_b += "]}";
  write_file("/tmp/gridlsh_sa.json", pts_a);
  write_file("/tmp/gridlsh_sb.json", pts_b);
  auto s = run_cli("experiment collision --type set --trials 200 --seed 3 --eps 0.2 "
                   "--alpha 0.25 --grid 40 --input-a /tmp/gridlsh_sa.json "
                   "--input-b /tmp/gridlsh_sb.json --no-csv");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("rate=") == 0);

  write_file("/tmp/gridlsh_pa.json",
             "{\"vertices\": [[60,60],[430,80],[440,420],[70,450]]}");
  write_file("/tmp/gridlsh_pb.json",
             "{\"vertices\": [[100,90],[460,100],[450,460],[90,440]]}");
  auto p = run_cli("experiment collision --type polygon --trials 60 --seed 3 --eps 0.5 "
                   "--alpha 0.5 --phi 0.2 --grid 512 --input-a /tmp/gridlsh_pa.json "
                   "--input-b /tmp/gridlsh_pb.json --no-csv");
  CHECK(p.exit_code == 0);
  CHECK(p.out.find("rate=") == 0);
  CHECK(p.out.find("verdict=") != std::string::npos);
}
