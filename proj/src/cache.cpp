#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "salpeter/kernel.hpp"

namespace salpeter {

namespace {

constexpr char kMagic[8] = {'S', 'A', 'L', 'P', 'B', 'A', 'S', '1'};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

template <class T>
void write_pod(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
bool read_pod(std::istream& is, T& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    return bool(is);
}

} // namespace

std::uint64_t physics_hash(const Grid& g, const Potential& v, const Units& u) {
    const std::string key = "grid;x_min=" + fmt(g.x_min) + ";x_max=" + fmt(g.x_max) +
                            ";n=" + std::to_string(g.n) + "|" + describe(v) +
                            "|units;hbar=" + fmt(u.hbar) + ";c=" + fmt(u.c) +
                            ";m=" + fmt(u.mass);
    return fnv1a(key);
}

void save_eigenbasis(const std::string& path, const EigenBasis& basis, std::uint64_t key) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
    }
    // Write to a temp file and rename so concurrent scan workers never see
    // a half-written basis.
    const fs::path tmp = target.string() + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cache: cannot open " + tmp.string() + " for writing");
        os.write(kMagic, sizeof(kMagic));
        write_pod(os, key);
        const std::int32_t n = basis.grid.n;
        write_pod(os, n);
        write_pod(os, basis.grid.x_min);
        write_pod(os, basis.grid.x_max);
        write_pod(os, basis.units.hbar);
        write_pod(os, basis.units.c);
        write_pod(os, basis.units.mass);
        os.write(reinterpret_cast<const char*>(basis.eps.data()),
                 static_cast<std::streamsize>(sizeof(double) * n));
        os.write(reinterpret_cast<const char*>(basis.vecs.data()),
                 static_cast<std::streamsize>(sizeof(std::complex<double>) * n * n));
        if (!os) throw IoError("cache: short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cache: cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

bool load_eigenbasis(const std::string& path, std::uint64_t key, EigenBasis& out) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return false;

    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) return false;

    std::uint64_t stored_key = 0;
    std::int32_t n = 0;
    double x_min = 0, x_max = 0;
    Units u;
    if (!read_pod(is, stored_key) || !read_pod(is, n) || !read_pod(is, x_min) ||
        !read_pod(is, x_max) || !read_pod(is, u.hbar) || !read_pod(is, u.c) ||
        !read_pod(is, u.mass))
        return false;
    if (stored_key != key || n <= 0) return false;

    EigenBasis basis;
    basis.grid = make_grid(x_min, x_max, n);
    basis.units = u;
    basis.eps.resize(n);
    basis.vecs.resize(n, n);
    is.read(reinterpret_cast<char*>(basis.eps.data()),
            static_cast<std::streamsize>(sizeof(double) * n));
    is.read(reinterpret_cast<char*>(basis.vecs.data()),
            static_cast<std::streamsize>(sizeof(std::complex<double>) * n * n));
    if (!is) return false;

    out = std::move(basis);
    return true;
}

EigenBasis load_or_diagonalize(const Grid& g, const Potential& v, const Units& u,
                               const std::string& cache_dir, bool* cache_hit) {
    if (cache_hit) *cache_hit = false;
    if (cache_dir.empty()) return diagonalize(build_hamiltonian(g, v, u));

    const std::uint64_t key = physics_hash(g, v, u);
    char name[40];
    std::snprintf(name, sizeof(name), "eigenbasis_%016llx.bin",
                  static_cast<unsigned long long>(key));
    const std::string path = (std::filesystem::path(cache_dir) / name).string();

    EigenBasis basis;
    if (load_eigenbasis(path, key, basis) && basis.grid == g) {
        if (cache_hit) *cache_hit = true;
        return basis;
    }
    basis = diagonalize(build_hamiltonian(g, v, u));
    save_eigenbasis(path, basis, key);
    return basis;
}

} // namespace salpeter
