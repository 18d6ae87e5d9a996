// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace auris {

enum class AudioErrc {
  FileMissing,
  NotRiff,
  BadFormatChunk,
  UnsupportedEncoding,  // compressed or float WAV payloads
  BadBitDepth,
  ChannelCount,
  Truncated,
  UnwritablePath,
  EmptyWaveform,
  ZeroRms,
  LengthMismatch,
  SampleRateMismatch,
  BadResampleFactor,
};

enum class DatasetErrc {
  EmptyCorpus,
  RecordingTooShort,
  InsufficientSpeechClips,
  BadClipLength,
  BadSplitRatios,
  LabelTooSmall,  // fewer than 3 clips, cannot populate all splits
  BadLabel,
  BadSourcesFile,
};

enum class WeightsErrc {
  BadMagic,
  VersionMismatch,
  Truncated,
  ChecksumMismatch,
  BadLayerTable,
};

enum class TrainErrc {
  MissingLabelInTrainingSplit,
  EmptySplit,
  Divergence,
};

template <typename Code>
class Error : public std::runtime_error {
 public:
  Error(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

using AudioError = Error<AudioErrc>;
using DatasetError = Error<DatasetErrc>;
using WeightsError = Error<WeightsErrc>;
using TrainError = Error<TrainErrc>;

// Shape/argument misuse inside the inference engine.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace auris
