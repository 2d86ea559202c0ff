#include "doctest.h"

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "lshull/experiment.hpp"
#include "lshull/io.hpp"
#include "support/oracles.hpp"
#include "support/shapes.hpp"

using namespace lshull;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "lshull_io_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("mask round trips and PGM variants") {
    const fs::path dir = temp_dir();

    SUBCASE("P2 and P5 encodings load identically") {
        const fs::path ascii = dir / "mask_ascii.pgm";
        {
            std::ofstream out(ascii);
            out << "P2\n# a comment line\n3 2\n255\n"
                   "0 255 0\n255 0 255\n";
        }
        const BinaryMask a = load_mask(ascii);
        CHECK(a.width() == 3);
        CHECK(a.height() == 2);
        CHECK(a(1, 0) == 1);
        CHECK(a(0, 0) == 0);
        CHECK(a(0, 1) == 1);

        const fs::path bin = dir / "mask_bin.pgm";
        save_mask(a, bin);
        CHECK(load_mask(bin) == a);
    }
    SUBCASE("PBM bit packing") {
        const fs::path pbm = dir / "mask.pbm";
        {
            std::ofstream out(pbm);
            // PBM: 1 = black = foreground
            out << "P1\n4 2\n1 0 0 1\n0 1 1 0\n";
        }
        const BinaryMask m = load_mask(pbm);
        CHECK(m(0, 0) == 1);
        CHECK(m(3, 0) == 1);
        CHECK(m(1, 1) == 1);
        CHECK(m.count() == 4);
    }
    SUBCASE("non-binary pixel is rejected with its location") {
        const fs::path bad = dir / "gray.pgm";
        {
            std::ofstream out(bad);
            out << "P2\n3 3\n255\n0 255 0\n0 128 0\n0 0 255\n";
        }
        CHECK_THROWS_WITH(load_mask(bad), doctest::Contains("m=1, n=1"));
    }
    SUBCASE("missing file throws") {
        CHECK_THROWS(load_mask(dir / "does_not_exist.pgm"));
    }
}

TEST_CASE("field binary format") {
    const fs::path dir = temp_dir();

    SUBCASE("round trip is bit exact") {
        const ScalarField f = oracles::random_field(13, 9, 77, -1e6, 1e6);
        const fs::path path = dir / "field.lsf1";
        dump_field(f, path);
        const ScalarField g = load_field(path);
        REQUIRE(g.width() == 13);
        REQUIRE(g.height() == 9);
        CHECK(f == g);
    }
    SUBCASE("2x3 field is exactly 64 bytes with the documented layout") {
        ScalarField f(2, 3);
        f(0, 0) = 1.0;
        f(1, 0) = 2.0;
        f(0, 1) = 3.0;
        f(1, 1) = 4.0;
        f(0, 2) = 5.0;
        f(1, 2) = 6.0;
        const fs::path path = dir / "tiny.lsf1";
        dump_field(f, path);
        const std::string bytes = slurp(path);
        REQUIRE(bytes.size() == 16 + 6 * 8);
        CHECK(bytes.substr(0, 4) == "LSF1");
        CHECK(static_cast<unsigned char>(bytes[4]) == 2);  // width, LE
        CHECK(static_cast<unsigned char>(bytes[5]) == 0);
        CHECK(static_cast<unsigned char>(bytes[8]) == 3);  // height, LE
        CHECK(bytes.substr(12, 4) == std::string(4, '\0')); // reserved
        // payload is m-fastest: first value 1.0, second 2.0
        double v0 = 0.0, v1 = 0.0;
        std::memcpy(&v0, bytes.data() + 16, 8);
        std::memcpy(&v1, bytes.data() + 24, 8);
        CHECK(v0 == 1.0);
        CHECK(v1 == 2.0);
    }
    SUBCASE("corrupt files are rejected") {
        const fs::path path = dir / "corrupt.lsf1";
        const ScalarField f(4, 4, 1.0);
        dump_field(f, path);

        std::string bytes = slurp(path);
        {
            std::ofstream out(dir / "truncated.lsf1", std::ios::binary);
            out.write(bytes.data(), static_cast<long>(bytes.size()) - 8);
        }
        CHECK_THROWS_WITH(load_field(dir / "truncated.lsf1"),
                          doctest::Contains("short payload"));

        bytes[0] = 'X';
        {
            std::ofstream out(dir / "badmagic.lsf1", std::ios::binary);
            out.write(bytes.data(), static_cast<long>(bytes.size()));
        }
        CHECK_THROWS_WITH(load_field(dir / "badmagic.lsf1"),
                          doctest::Contains("bad magic"));
    }
}

TEST_CASE("xorshift64* determinism") {
    Xorshift64Star a(42), b(42), c(43);
    bool identical = true, all_differ = true;
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t va = a.next();
        identical = identical && va == b.next();
        all_differ = all_differ && va != c.next();
    }
    CHECK(identical);
    CHECK(all_differ);

    SUBCASE("next_below stays in range") {
        Xorshift64Star rng(7);
        for (int i = 0; i < 1000; ++i) CHECK(rng.next_below(13) < 13);
    }
}

TEST_CASE("add_outliers") {
    const auto mask = shapes::disk(48, 10.0);

    SUBCASE("adds exactly count pixels outside the input") {
        const BinaryMask noisy = add_outliers(mask, 25, 1);
        CHECK(noisy.count() == mask.count() + 25);
        for (int n = 0; n < 48; ++n)
            for (int m = 0; m < 48; ++m)
                if (mask(m, n)) CHECK(noisy(m, n) == 1);
    }
    SUBCASE("same seed reproduces, different seeds differ") {
        CHECK(add_outliers(mask, 25, 9) == add_outliers(mask, 25, 9));
        CHECK_FALSE(add_outliers(mask, 25, 9) == add_outliers(mask, 25, 10));
    }
    SUBCASE("count exceeding the background throws") {
        BinaryMask tiny(3, 3);
        tiny(1, 1) = 1;
        CHECK_THROWS(add_outliers(tiny, 9, 1));
        CHECK_NOTHROW(add_outliers(tiny, 8, 1));
    }
}

TEST_CASE("run_experiment writes a reproducible artifact set") {
    const fs::path dir = temp_dir() / "exp";
    fs::create_directories(dir);
    const auto mask = shapes::disk(64, 12.0);

    ExperimentSpec spec;
    spec.name = "disk";
    spec.mask = mask;
    spec.cfg = SolverConfig::exact_defaults();
    spec.cfg.c = 10.0;
    spec.out_prefix = dir / "disk";

    const ExperimentResult result = run_experiment(spec);
    CHECK(result.record.containment == 1.0);
    CHECK(result.record.relative_error <= 0.05);
    CHECK(result.solve.phi.width() == 64);
    CHECK(result.solve.hull.width() == 64);

    const fs::path files[] = {dir / "disk_hull.pgm", dir / "disk_phi.lsf1",
                              dir / "disk_trace.csv", dir / "disk_record.csv"};
    for (const auto& f : files) CHECK(fs::exists(f));

    SUBCASE("record carries the full configuration") {
        const std::string record = slurp(dir / "disk_record.csv");
        CHECK(record.find("rho0=") != std::string::npos);
        CHECK(record.find("disk") != std::string::npos);
    }
    SUBCASE("a second run is bit-identical") {
        std::string first[4];
        for (int i = 0; i < 4; ++i) first[i] = slurp(files[i]);
        run_experiment(spec);
        for (int i = 0; i < 4; ++i) CHECK(slurp(files[i]) == first[i]);
    }
    SUBCASE("csv field variant replaces the binary dump") {
        ExperimentSpec alt = spec;
        alt.out_prefix = dir / "diskcsv";
        alt.csv_field = true;
        run_experiment(alt);
        CHECK(fs::exists(dir / "diskcsv_phi.csv"));
        CHECK_FALSE(fs::exists(dir / "diskcsv_phi.lsf1"));
    }
}

TEST_CASE("padding helpers") {
    const auto mask = shapes::disk(16, 5.0);
    const BinaryMask padded = pad_mask(mask, 3);
    CHECK(padded.width() == 22);
    CHECK(padded.height() == 22);
    CHECK(padded.count() == mask.count());
    CHECK(crop_mask(padded, 3, 16, 16) == mask);

    ScalarField f(22, 22, 0.0);
    f(3 + 4, 3 + 7) = 9.0;
    const ScalarField cropped = crop_field(f, 3, 16, 16);
    CHECK(cropped(4, 7) == 9.0);
}
