#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "scfde/spectral.hpp"

namespace scfde {

/// Exponential power delay profile. Tap l carries expected power
/// proportional to exp(-l/decay); powers() normalizes the total to 1 so the
/// SNR axis keeps its meaning regardless of the tap count.
struct FadingProfile {
  int length = 1;
  double decay = 2.0;

  std::vector<double> powers() const {
    if (length < 1) throw DimensionError("FadingProfile: length must be >= 1");
    std::vector<double> p(length);
    double total = 0;
    for (int l = 0; l < length; ++l) {
      p[l] = std::exp(-static_cast<double>(l) / decay);
      total += p[l];
    }
    for (double& x : p) x /= total;
    return p;
  }
};

/// One frequency-selective two-hop MIMO channel draw: time-domain taps for
/// both hops plus their per-tone matrices and cached sorted SVDs.
struct ChannelRealization {
  int n_s = 0, n_r = 0, n_d = 0, n_c = 0;
  std::uint64_t seed = 0;  // provenance label, set by the caller
  std::vector<cmat> sr_taps;   // L_g matrices, N_r x N_s
  std::vector<cmat> rd_taps;   // L_h matrices, N_d x N_r
  std::vector<cmat> sr_tones;  // N_c matrices
  std::vector<cmat> rd_tones;  // N_c matrices
  std::vector<SortedSvd> sr_svd;
  std::vector<SortedSvd> rd_svd;

  void finish() {
    sr_tones = taps_to_tones(sr_taps, n_c);
    rd_tones = taps_to_tones(rd_taps, n_c);
    sr_svd.clear();
    rd_svd.clear();
    sr_svd.reserve(n_c);
    rd_svd.reserve(n_c);
    for (int k = 0; k < n_c; ++k) {
      sr_svd.push_back(sorted_svd(sr_tones[k]));
      rd_svd.push_back(sorted_svd(rd_tones[k]));
    }
  }
};

struct ChannelDims {
  int n_s = 2, n_r = 2, n_d = 2;
};

/// Draws both hops with iid circularly-symmetric Gaussian taps whose
/// per-delay variance follows the (normalized) profile. Tap entries are
/// consumed from the generator in (tap, row-major entry) order, source hop
/// first, which pins the determinism contract.
inline ChannelRealization generate_channel(Rng& rng, const ChannelDims& dims,
                                           const FadingProfile& sr_profile,
                                           const FadingProfile& rd_profile,
                                           int n_c) {
  if (dims.n_s < 1 || dims.n_r < 1 || dims.n_d < 1 || n_c < 1)
    throw DimensionError("generate_channel: dimensions must be >= 1");
  if (sr_profile.length > n_c || rd_profile.length > n_c)
    throw DimensionError("generate_channel: profile longer than the block");
  ChannelRealization ch;
  ch.n_s = dims.n_s;
  ch.n_r = dims.n_r;
  ch.n_d = dims.n_d;
  ch.n_c = n_c;
  auto draw = [&](int rows, int cols, const FadingProfile& prof) {
    std::vector<cmat> taps;
    std::vector<double> p = prof.powers();
    for (int l = 0; l < prof.length; ++l) {
      cmat t(rows, cols);
      double s = std::sqrt(p[l]);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t(i, j) = s * rng.cgaussian();
      taps.push_back(std::move(t));
    }
    return taps;
  };
  ch.sr_taps = draw(dims.n_r, dims.n_s, sr_profile);
  ch.rd_taps = draw(dims.n_d, dims.n_r, rd_profile);
  ch.finish();
  return ch;
}

/// Per-tone channel gains of the top m_streams spatial streams,
/// strongest stream first: entry (k, m) is the (m+1)-th largest singular
/// value of the tone-k matrix.
struct ToneGains {
  rmat g;  // n_c x m, source hop
  rmat h;  // n_c x m, relay hop
};

inline ToneGains tone_gains(const ChannelRealization& ch, int m_streams) {
  if (m_streams < 1 || m_streams > std::min({ch.n_s, ch.n_r, ch.n_d}))
    throw DimensionError("tone_gains: stream count exceeds antenna limit");
  ToneGains out;
  out.g = rmat(ch.n_c, m_streams);
  out.h = rmat(ch.n_c, m_streams);
  for (int k = 0; k < ch.n_c; ++k) {
    const rvec& gs = ch.sr_svd[k].singular;
    const rvec& hs = ch.rd_svd[k].singular;
    for (int m = 0; m < m_streams; ++m) {
      out.g(k, m) = gs[gs.size() - 1 - m];
      out.h(k, m) = hs[hs.size() - 1 - m];
    }
  }
  return out;
}

/// Plain-text fixture format: header line with dims and seed, then one
/// complex entry per line ("re im"), taps in order, row-major, source hop
/// first. Tones and SVDs are regenerated on load.
inline void save_channel(std::ostream& os, const ChannelRealization& ch) {
  os << "scfde-channel v1\n";
  os << ch.n_s << ' ' << ch.n_r << ' ' << ch.n_d << ' ' << ch.n_c << ' '
     << ch.sr_taps.size() << ' ' << ch.rd_taps.size() << ' ' << ch.seed
     << '\n';
  os.precision(17);
  auto dump = [&](const std::vector<cmat>& taps) {
    for (const cmat& t : taps)
      for (Eigen::Index i = 0; i < t.rows(); ++i)
        for (Eigen::Index j = 0; j < t.cols(); ++j)
          os << std::real(t(i, j)) << ' ' << std::imag(t(i, j)) << '\n';
  };
  dump(ch.sr_taps);
  dump(ch.rd_taps);
}

inline ChannelRealization load_channel(std::istream& is) {
  std::string magic, version;
  is >> magic >> version;
  if (magic != "scfde-channel" || version != "v1")
    throw ConfigError("load_channel: not a channel fixture");
  ChannelRealization ch;
  std::size_t l_g = 0, l_h = 0;
  is >> ch.n_s >> ch.n_r >> ch.n_d >> ch.n_c >> l_g >> l_h >> ch.seed;
  if (!is) throw ConfigError("load_channel: bad header");
  auto slurp = [&](std::size_t count, int rows, int cols) {
    std::vector<cmat> taps;
    for (std::size_t l = 0; l < count; ++l) {
      cmat t(rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          double re, im;
          is >> re >> im;
          t(i, j) = cplx(re, im);
        }
      taps.push_back(std::move(t));
    }
    return taps;
  };
  ch.sr_taps = slurp(l_g, ch.n_r, ch.n_s);
  ch.rd_taps = slurp(l_h, ch.n_d, ch.n_r);
  if (!is) throw ConfigError("load_channel: truncated tap data");
  ch.finish();
  return ch;
}

}  // namespace scfde
