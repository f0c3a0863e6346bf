#include "axiswirl/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

static_assert(std::endian::native == std::endian::little,
              "checkpoint format is little-endian");

namespace axi {

namespace {

constexpr char kMagic[4] = {'A', 'X', 'I', '1'};

void write_array(std::ofstream& out, const ScalarField& f) {
    for (int i = 0; i < f.ni; ++i)
        out.write(reinterpret_cast<const char*>(f.row(i)),
                  std::streamsize(f.nj) * sizeof(double));
}

void read_array(std::ifstream& in, ScalarField& f) {
    for (int i = 0; i < f.ni; ++i)
        in.read(reinterpret_cast<char*>(f.row(i)),
                std::streamsize(f.nj) * sizeof(double));
}

}  // namespace

void write_checkpoint(const std::string& path, const State& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("checkpoint: cannot open " + path + " for writing");
    out.write(kMagic, 4);
    const std::int64_t nr = s.grid.nr, nz = s.grid.nz;
    out.write(reinterpret_cast<const char*>(&nr), 8);
    out.write(reinterpret_cast<const char*>(&nz), 8);
    out.write(reinterpret_cast<const char*>(&s.grid.R), 8);
    out.write(reinterpret_cast<const char*>(&s.grid.Z), 8);
    out.write(reinterpret_cast<const char*>(&s.t), 8);
    write_array(out, s.rho);
    write_array(out, s.ur);
    write_array(out, s.uth);
    write_array(out, s.u3);
    write_array(out, s.pi);
    if (!out) throw ConfigError("checkpoint: write failed for " + path);
}

State read_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("checkpoint: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw ConfigError("checkpoint: bad magic in " + path);
    std::int64_t nr = 0, nz = 0;
    double R = 0, Z = 0, t = 0;
    in.read(reinterpret_cast<char*>(&nr), 8);
    in.read(reinterpret_cast<char*>(&nz), 8);
    in.read(reinterpret_cast<char*>(&R), 8);
    in.read(reinterpret_cast<char*>(&Z), 8);
    in.read(reinterpret_cast<char*>(&t), 8);
    if (!in) throw ConfigError("checkpoint: truncated header in " + path);
    State s = make_state(make_grid(R, Z, int(nr), int(nz)));
    s.t = t;
    read_array(in, s.rho);
    read_array(in, s.ur);
    read_array(in, s.uth);
    read_array(in, s.u3);
    read_array(in, s.pi);
    if (!in) throw ConfigError("checkpoint: truncated data in " + path);
    sync_ghosts(s.rho, Outer::ZeroGradient, Outer::ZeroGradient);
    sync_ghosts(s.ur, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(s.uth, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(s.u3, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(s.pi, Outer::ZeroGradient, Outer::ZeroGradient);
    return s;
}

}  // namespace axi
