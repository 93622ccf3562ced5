#include "exth/enumerate.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace exth {

namespace {

namespace fs = std::filesystem;

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string payload_of(const Rank1Shell& shell) {
    std::ostringstream os;
    os << to_string(shell.lattice) << ' ' << shell.trace << ' ' << shell.elements.size() << ' '
       << shell.weighted << '\n';
    for (const auto& e : shell.elements) {
        for (int i = 0; i < 27; ++i) os << e[i] << (i == 26 ? '\n' : ' ');
    }
    return os.str();
}

fs::path cache_path(const std::string& dir, LatticeName lattice, int trace) {
    return fs::path(dir) / ("shell-" + to_string(lattice) + "-t" + std::to_string(trace) + ".txt");
}

}  // namespace

bool shell_cache_load(const std::string& dir, LatticeName lattice, int trace, Rank1Shell& out) {
    std::ifstream in(cache_path(dir, lattice, trace));
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header)) return false;
    std::istringstream hs(header);
    std::string magic;
    uint64_t checksum = 0;
    if (!(hs >> magic >> checksum) || magic != "exth-shell-v1") return false;
    std::ostringstream rest;
    rest << in.rdbuf();
    const std::string payload = rest.str();
    if (fnv1a(payload) != checksum) return false;  // corrupt: caller recomputes

    std::istringstream ps(payload);
    std::string name;
    size_t count = 0;
    Rank1Shell shell;
    if (!(ps >> name >> shell.trace >> count >> shell.weighted)) return false;
    auto ln = lattice_from_string(name);
    if (!ln || *ln != lattice || shell.trace != trace) return false;
    shell.lattice = lattice;
    shell.elements.resize(count);
    for (size_t r = 0; r < count; ++r)
        for (int i = 0; i < 27; ++i)
            if (!(ps >> shell.elements[r][i])) return false;
    out = std::move(shell);
    return true;
}

void shell_cache_store(const std::string& dir, const Rank1Shell& shell) {
    fs::create_directories(dir);
    const auto path = cache_path(dir, shell.lattice, shell.trace);
    const auto tmp = path.string() + ".tmp";
    const std::string payload = payload_of(shell);
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << "exth-shell-v1 " << fnv1a(payload) << '\n' << payload;
        if (!out) throw std::runtime_error("shell cache: write failed: " + tmp);
    }
    fs::rename(tmp, path);
}

}  // namespace exth
