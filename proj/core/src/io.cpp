#include "lshull/io.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lshull {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

// Skips whitespace and '#' comments, then reads one token.
std::string next_token(std::istream& in) {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {}
        } else if (!std::isspace(ch)) {
            tok.push_back(static_cast<char>(ch));
            while ((ch = in.peek()) != EOF && !std::isspace(ch) && ch != '#')
                tok.push_back(static_cast<char>(in.get()));
            return tok;
        }
    }
    return tok;
}

int next_int(std::istream& in, const std::filesystem::path& path,
             const char* what) {
    const std::string tok = next_token(in);
    try {
        return std::stoi(tok);
    } catch (...) {
        fail(path, std::string("bad or missing ") + what);
    }
}

void put_u32le(std::ostream& out, std::uint32_t v) {
    char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                 static_cast<char>((v >> 16) & 0xff),
                 static_cast<char>((v >> 24) & 0xff)};
    out.write(b, 4);
}

std::uint32_t get_u32le(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
}

static_assert(std::endian::native == std::endian::little,
              "LSF1 I/O assumes a little-endian host");

} // namespace

BinaryMask load_mask(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");

    const std::string magic = next_token(in);
    const bool is_pbm = magic == "P1" || magic == "P4";
    const bool is_pgm = magic == "P2" || magic == "P5";
    if (!is_pbm && !is_pgm) fail(path, "unsupported magic '" + magic + "'");

    const int width = next_int(in, path, "width");
    const int height = next_int(in, path, "height");
    if (width <= 0 || height <= 0) fail(path, "bad dimensions");
    const int maxval = is_pgm ? next_int(in, path, "maxval") : 1;
    if (maxval <= 0 || maxval > 255) fail(path, "unsupported maxval");

    BinaryMask mask(width, height);
    auto check_value = [&](int v, long index) {
        if (v != 0 && v != maxval) {
            std::ostringstream msg;
            msg << "non-binary pixel value " << v << " at pixel index " << index
                << " (m=" << index % width << ", n=" << index / width << ")";
            fail(path, msg.str());
        }
    };

    const long total = static_cast<long>(width) * height;
    if (magic == "P2" || magic == "P1") {
        for (long i = 0; i < total; ++i) {
            const int v = next_int(in, path, "pixel");
            check_value(v, i);
            // PBM convention: 1 is black ink, i.e. foreground
            mask.data()[i] = (v != 0) ? 1 : 0;
        }
    } else if (magic == "P5") {
        in.get(); // single whitespace separator before the raw payload
        std::vector<unsigned char> buf(total);
        in.read(reinterpret_cast<char*>(buf.data()), total);
        if (in.gcount() != total) fail(path, "short pixel payload");
        for (long i = 0; i < total; ++i) {
            check_value(buf[i], i);
            mask.data()[i] = buf[i] ? 1 : 0;
        }
    } else { // P4: packed bits, rows padded to whole bytes
        in.get(); // single whitespace separator before the raw payload
        const int row_bytes = (width + 7) / 8;
        std::vector<unsigned char> buf(static_cast<long>(row_bytes) * height);
        in.read(reinterpret_cast<char*>(buf.data()),
                static_cast<long>(buf.size()));
        if (in.gcount() != static_cast<long>(buf.size()))
            fail(path, "short pixel payload");
        for (int n = 0; n < height; ++n)
            for (int m = 0; m < width; ++m) {
                const unsigned char byte = buf[static_cast<long>(n) * row_bytes + m / 8];
                mask(m, n) = (byte >> (7 - m % 8)) & 1;
            }
    }
    return mask;
}

void save_mask(const BinaryMask& mask, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open for writing");
    out << "P5\n" << mask.width() << " " << mask.height() << "\n255\n";
    std::vector<unsigned char> buf(mask.size());
    for (std::size_t i = 0; i < buf.size(); ++i)
        buf[i] = mask.data()[i] ? 255 : 0;
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<long>(buf.size()));
    if (!out) fail(path, "write failed");
}

void dump_field(const ScalarField& f, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open for writing");
    out.write("LSF1", 4);
    put_u32le(out, static_cast<std::uint32_t>(f.width()));
    put_u32le(out, static_cast<std::uint32_t>(f.height()));
    put_u32le(out, 0);
    out.write(reinterpret_cast<const char*>(f.data().data()),
              static_cast<long>(f.size() * sizeof(double)));
    if (!out) fail(path, "write failed");
}

ScalarField load_field(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    char magic[4];
    in.read(magic, 4);
    if (in.gcount() != 4 || std::memcmp(magic, "LSF1", 4) != 0)
        fail(path, "bad magic");
    const std::uint32_t width = get_u32le(in);
    const std::uint32_t height = get_u32le(in);
    get_u32le(in); // reserved
    if (!in || width == 0 || height == 0 || width > (1u << 20) ||
        height > (1u << 20))
        fail(path, "bad shape");

    ScalarField f(static_cast<int>(width), static_cast<int>(height));
    const long bytes = static_cast<long>(f.size() * sizeof(double));
    in.read(reinterpret_cast<char*>(f.data().data()), bytes);
    if (in.gcount() != bytes) fail(path, "short payload");
    return f;
}

void dump_field_csv(const ScalarField& f, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(path, "cannot open for writing");
    out.precision(17);
    for (int n = 0; n < f.height(); ++n) {
        for (int m = 0; m < f.width(); ++m) {
            if (m) out << ',';
            out << f(m, n);
        }
        out << '\n';
    }
    if (!out) fail(path, "write failed");
}

void save_heatmap(const ScalarField& f, const std::filesystem::path& path) {
    auto data = f.data();
    double lo = data[0], hi = data[0];
    for (double v : data) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi > lo ? hi - lo : 1.0;

    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open for writing");
    out << "P5\n" << f.width() << " " << f.height() << "\n255\n";
    std::vector<unsigned char> buf(f.size());
    for (std::size_t i = 0; i < buf.size(); ++i)
        buf[i] = static_cast<unsigned char>(255.0 * (data[i] - lo) / span);
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<long>(buf.size()));
    if (!out) fail(path, "write failed");
}

void save_level_bands_csv(const ScalarField& phi,
                          const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(path, "cannot open for writing");
    out << "level,m,n,phi\n";
    out.precision(17);
    for (double level : {0.0, 10.0, 20.0})
        for (int n = 0; n < phi.height(); ++n)
            for (int m = 0; m < phi.width(); ++m)
                if (std::abs(phi(m, n) - level) <= 0.5)
                    out << level << ',' << m << ',' << n << ',' << phi(m, n)
                        << '\n';
    if (!out) fail(path, "write failed");
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed) {
    // splitmix64 scramble so that small seeds (including 0) give
    // well-mixed nonzero states
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    state_ = z ^ (z >> 31);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ull;
}

std::uint64_t Xorshift64Star::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
}

std::uint64_t Xorshift64Star::next_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

BinaryMask add_outliers(const BinaryMask& mask, int count, std::uint64_t seed) {
    if (count < 0)
        throw std::invalid_argument("add_outliers: count must be >= 0");

    std::vector<std::size_t> background;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (!mask.data()[i]) background.push_back(i);
    if (static_cast<std::size_t>(count) > background.size())
        throw std::invalid_argument("add_outliers: count exceeds background size");

    BinaryMask out = mask;
    Xorshift64Star rng(seed);
    // partial Fisher-Yates: the first `count` slots end up distinct
    for (int k = 0; k < count; ++k) {
        const std::size_t j =
            k + rng.next_below(background.size() - static_cast<std::size_t>(k));
        std::swap(background[k], background[j]);
        out.data()[background[k]] = 1;
    }
    return out;
}

} // namespace lshull
