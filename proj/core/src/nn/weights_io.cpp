// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/nn/weights_io.hpp"

#include <cstring>
#include <fstream>
#include <string>

#include "auris/common/crc32.hpp"
#include "auris/common/error.hpp"
#include "auris/nn/half.hpp"

namespace auris::nn {
namespace {

constexpr char kMagic[4] = {'S', 'C', 'N', 'W'};
constexpr std::uint16_t kVersion = 1;

class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16(std::uint16_t v) { le(v); }
  void u32(std::uint32_t v) { le(v); }
  void u64(std::uint64_t v) { le(v); }
  void f32(float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    le(bits);
  }
  void bytes(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    buf_.insert(buf_.end(), p, p + len);
  }
  std::vector<unsigned char>& data() { return buf_; }

 private:
  template <typename T>
  void le(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      buf_.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
    }
  }
  std::vector<unsigned char> buf_;
};

class ByteReader {
 public:
  ByteReader(const unsigned char* data, std::size_t len)
      : data_(data), len_(len) {}

  std::uint8_t u8() { return take<std::uint8_t>(); }
  std::uint16_t u16() { return take<std::uint16_t>(); }
  std::uint32_t u32() { return take<std::uint32_t>(); }
  std::uint64_t u64() { return take<std::uint64_t>(); }
  float f32() {
    std::uint32_t bits = take<std::uint32_t>();
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
  }
  void bytes(void* out, std::size_t len) {
    need(len);
    std::memcpy(out, data_ + pos_, len);
    pos_ += len;
  }
  std::size_t pos() const { return pos_; }

 private:
  void need(std::size_t len) {
    if (pos_ + len > len_) {
      throw WeightsError(WeightsErrc::Truncated,
                         "weight file ends mid-structure");
    }
  }
  template <typename T>
  T take() {
    need(sizeof(T));
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<T>(data_[pos_ + i]) << (8 * i);
    }
    pos_ += sizeof(T);
    return v;
  }
  const unsigned char* data_;
  std::size_t len_;
  std::size_t pos_ = 0;
};

std::size_t dtype_size(Dtype d) { return d == Dtype::F16 ? 2 : 4; }

}  // namespace

std::size_t weights_file_size(const ModelWeights& m, Dtype dtype) {
  std::size_t size = 4 + 2 + 1 + 4;  // magic, version, dtype, class count
  size += 4;
  for (const auto& label : m.labels) size += 2 + label.size();
  size += 4;
  std::size_t elements = 0;
  for (const auto& layer : m.layers) {
    size += 1 + 1 + 4 * 4 + 4 + 4;  // kind..epsilon, tensor_count
    size += layer.tensors.size() * 16;
    for (const auto& t : layer.tensors) elements += t.size();
  }
  size += 8;  // blob byte count
  size += elements * dtype_size(dtype);
  size += 4;  // crc32
  return size;
}

void save_weights(const ModelWeights& m, const std::filesystem::path& path,
                  Dtype dtype) {
  ByteWriter w;
  w.bytes(kMagic, 4);
  w.u16(kVersion);
  w.u8(static_cast<std::uint8_t>(dtype));
  w.u32(static_cast<std::uint32_t>(m.class_count));

  w.u32(static_cast<std::uint32_t>(m.labels.size()));
  for (const auto& label : m.labels) {
    w.u16(static_cast<std::uint16_t>(label.size()));
    w.bytes(label.data(), label.size());
  }

  w.u32(static_cast<std::uint32_t>(m.layers.size()));
  std::uint64_t blob_offset = 0;
  for (const auto& layer : m.layers) {
    w.u8(static_cast<std::uint8_t>(layer.kind));
    w.u8(static_cast<std::uint8_t>(layer.stride));
    w.u32(static_cast<std::uint32_t>(layer.kh));
    w.u32(static_cast<std::uint32_t>(layer.kw));
    w.u32(static_cast<std::uint32_t>(layer.cin));
    w.u32(static_cast<std::uint32_t>(layer.cout));
    w.f32(layer.epsilon);
    w.u32(static_cast<std::uint32_t>(layer.tensors.size()));
    for (const auto& t : layer.tensors) {
      w.u64(blob_offset);
      w.u64(t.size());
      blob_offset += t.size() * dtype_size(dtype);
    }
  }

  w.u64(blob_offset);
  for (const auto& layer : m.layers) {
    for (const auto& t : layer.tensors) {
      if (dtype == Dtype::F32) {
        for (float v : t) w.f32(v);
      } else {
        for (float v : t) w.u16(f32_to_f16(v));
      }
    }
  }

  const std::uint32_t crc = Crc32::of(w.data().data(), w.data().size());
  w.u32(crc);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw AudioError(AudioErrc::UnwritablePath,
                     "cannot write weights: " + path.string());
  }
  out.write(reinterpret_cast<const char*>(w.data().data()),
            static_cast<std::streamsize>(w.data().size()));
  if (!out) {
    throw AudioError(AudioErrc::UnwritablePath,
                     "weights write failed: " + path.string());
  }
}

ModelWeights load_weights(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw WeightsError(WeightsErrc::Truncated,
                       "cannot open weights: " + path.string());
  }
  std::vector<unsigned char> file(
      (std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (file.size() < 4 + 2 + 1 + 4 + 4) {
    throw WeightsError(WeightsErrc::Truncated,
                       "weight file too small: " + path.string());
  }
  if (std::memcmp(file.data(), kMagic, 4) != 0) {
    throw WeightsError(WeightsErrc::BadMagic,
                       "bad magic in weights: " + path.string());
  }

  // CRC covers everything but its own trailing 4 bytes.
  std::uint32_t stored_crc = 0;
  for (int i = 0; i < 4; ++i) {
    stored_crc |= static_cast<std::uint32_t>(file[file.size() - 4 + i])
                  << (8 * i);
  }
  if (Crc32::of(file.data(), file.size() - 4) != stored_crc) {
    throw WeightsError(WeightsErrc::ChecksumMismatch,
                       "weights checksum mismatch: " + path.string());
  }

  ByteReader r(file.data(), file.size() - 4);
  char magic[4];
  r.bytes(magic, 4);
  const std::uint16_t version = r.u16();
  if (version != kVersion) {
    throw WeightsError(WeightsErrc::VersionMismatch,
                       "unsupported weights version " +
                           std::to_string(version));
  }
  const auto dtype_code = r.u8();
  if (dtype_code > 1) {
    throw WeightsError(WeightsErrc::BadLayerTable,
                       "unknown dtype code " + std::to_string(dtype_code));
  }

  ModelWeights m;
  m.format_version = version;
  m.dtype = static_cast<Dtype>(dtype_code);
  m.class_count = static_cast<int>(r.u32());

  const std::uint32_t label_count = r.u32();
  m.labels.resize(label_count);
  for (auto& label : m.labels) {
    const std::uint16_t len = r.u16();
    label.resize(len);
    r.bytes(label.data(), len);
  }

  struct TensorRef {
    std::uint64_t offset;
    std::uint64_t count;
  };
  const std::uint32_t layer_count = r.u32();
  m.layers.resize(layer_count);
  std::vector<std::vector<TensorRef>> refs(layer_count);
  for (std::uint32_t i = 0; i < layer_count; ++i) {
    auto& layer = m.layers[i];
    const auto kind = r.u8();
    if (kind > static_cast<std::uint8_t>(LayerKind::Sigmoid)) {
      throw WeightsError(WeightsErrc::BadLayerTable,
                         "unknown layer kind " + std::to_string(kind));
    }
    layer.kind = static_cast<LayerKind>(kind);
    layer.stride = r.u8();
    layer.kh = static_cast<int>(r.u32());
    layer.kw = static_cast<int>(r.u32());
    layer.cin = static_cast<int>(r.u32());
    layer.cout = static_cast<int>(r.u32());
    layer.epsilon = r.f32();
    const std::uint32_t tensor_count = r.u32();
    refs[i].resize(tensor_count);
    for (auto& ref : refs[i]) {
      ref.offset = r.u64();
      ref.count = r.u64();
    }
  }

  const std::uint64_t blob_bytes = r.u64();
  const std::size_t blob_start = r.pos();
  if (blob_start + blob_bytes != file.size() - 4) {
    throw WeightsError(WeightsErrc::Truncated,
                       "blob size disagrees with file size");
  }
  const std::size_t elem_size = dtype_size(m.dtype);
  for (std::uint32_t i = 0; i < layer_count; ++i) {
    m.layers[i].tensors.resize(refs[i].size());
    for (std::size_t t = 0; t < refs[i].size(); ++t) {
      const auto& ref = refs[i][t];
      if (ref.offset + ref.count * elem_size > blob_bytes) {
        throw WeightsError(WeightsErrc::BadLayerTable,
                           "tensor extends past blob end");
      }
      auto& dst = m.layers[i].tensors[t];
      dst.resize(ref.count);
      const unsigned char* src = file.data() + blob_start + ref.offset;
      if (m.dtype == Dtype::F32) {
        std::memcpy(dst.data(), src, ref.count * 4);
      } else {
        for (std::uint64_t k = 0; k < ref.count; ++k) {
          std::uint16_t h = static_cast<std::uint16_t>(src[2 * k]) |
                            (static_cast<std::uint16_t>(src[2 * k + 1]) << 8);
          dst[k] = f16_to_f32(h);
        }
      }
    }
  }
  return m;
}

}  // namespace auris::nn
