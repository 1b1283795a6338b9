#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "icisense/lte/types.hpp"

namespace icisense::lte {

using Bits = std::vector<std::uint8_t>;

inline constexpr int kMibBits = 24;
inline constexpr int kCrcBits = 16;
inline constexpr int kMibCodedBlock = kMibBits + kCrcBits;  // 40

Bits pack_mib(const MibPayload& mib);
MibPayload unpack_mib(std::span<const std::uint8_t> bits);

/// CRC-16 with generator D^16 + D^12 + D^5 + 1, zero initial state.
std::uint16_t crc16(std::span<const std::uint8_t> bits);

/// Antenna-port CRC mask for 1, 2 or 4 ports.
std::uint16_t crc_mask(int n_ports);

/// Tail-biting convolutional code, K = 7, rate 1/3, generators 133/171/165
/// (octal). Output is the three streams concatenated: d0 | d1 | d2.
Bits conv_encode(std::span<const std::uint8_t> bits);

/// Circular-buffer rate matching of the three encoder streams to `e` bits.
Bits rate_match(std::span<const std::uint8_t> encoded, std::size_t e);

/// Inverse of rate_match for soft values: accumulates repetitions into the
/// three streams (each of length `block_len`).
std::vector<double> rate_dematch(std::span<const double> soft, std::size_t block_len,
                                 std::size_t offset = 0);

/// Soft input: positive means bit 0. Returns the ML-ish tail-biting decision
/// using a wrap-around Viterbi over three passes.
Bits viterbi_decode(std::span<const double> soft_streams, std::size_t block_len);

/// Scrambled 1920-bit PBCH codeword for one 40 ms TTI.
Bits encode_mib(const MibPayload& mib, int n_ports, const CellIdentity& identity);

struct MibDecodeResult {
  MibPayload mib;
  int n_ports = 1;
};

/// Decodes descrambled-in-place soft bits of any subset of the codeword.
/// `soft` has one entry per codeword bit (zero where unobserved), scrambling
/// already removed. Returns nullopt if the CRC matches no port mask.
std::optional<MibDecodeResult> decode_codeword(std::span<const double> soft);

/// Scrambling sequence for the whole TTI (c_init = N_ID).
const Bits& pbch_scrambling(int n_id);

}  // namespace icisense::lte
