#include "nls/snapshot.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace nls {

void write_snapshot(const SpectralField& f, std::ostream& out) {
    const int m = f.grid.modes;
    out << "nlsfield v1 M=" << m << "\n";
    char line[96];
    for (int k = -m / 2; k < m / 2; ++k) {
        const cplx& c = f.at_mode(k);
        std::snprintf(line, sizeof line, "%d %.16e %.16e\n", k, c.real(),
                      c.imag());
        out << line;
    }
}

void write_snapshot_file(const SpectralField& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw snapshot_error("cannot open for writing: " + path);
    write_snapshot(f, out);
    if (!out) throw snapshot_error("write failed: " + path);
}

SpectralField read_snapshot(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw snapshot_error("empty snapshot stream");
    int m = 0;
    if (std::sscanf(header.c_str(), "nlsfield v1 M=%d", &m) != 1)
        throw snapshot_error("bad snapshot header: " + header);
    SpectralField f = make_field(make_grid(m));
    std::string line;
    for (int k = -m / 2; k < m / 2; ++k) {
        if (!std::getline(in, line))
            throw snapshot_error("truncated snapshot: missing mode " +
                                 std::to_string(k));
        int kk = 0;
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%d %lf %lf", &kk, &re, &im) != 3)
            throw snapshot_error("bad snapshot line: " + line);
        if (kk != k)
            throw snapshot_error("snapshot mode out of order: expected " +
                                 std::to_string(k) + ", got " +
                                 std::to_string(kk));
        if (!std::isfinite(re) || !std::isfinite(im))
            throw snapshot_error("non-finite coefficient at mode " +
                                 std::to_string(k));
        f.at_mode(k) = cplx{re, im};
    }
    return f;
}

SpectralField read_snapshot_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw snapshot_error("cannot open: " + path);
    return read_snapshot(in);
}

}  // namespace nls
