#pragma once

#include <cstdint>
#include <string>

#include "drnn/types.hpp"

namespace drnn {

// Topology of a deep recurrent network.
//
// The network is a stack: N_I external inputs feed a visible layer of N_V
// units, hidden layers 1..N_L (bottom-up, uniform width N_H) sit above it,
// and an output layer of N_O units reads the top hidden layer. Every unit
// has a bias input; every hidden layer additionally has a recurrent input
// from its own output at lag 1 (no bias on the recurrent block). The
// activation is applied at every layer, output layer included.
//
// bptt_extent B is the number of past instants retained and differentiated
// through: histories hold B+1 instants (current plus -1..-B), outputs at
// instant -B are the truncation boundary.
struct NetworkConfig {
  int n_inputs = 1;         // N_I
  int n_visible = 1;        // N_V
  int n_hidden_layers = 1;  // N_L
  int hidden_width = 1;     // N_H, uniform across hidden layers
  int n_outputs = 1;        // N_O
  int bptt_extent = 1;      // B >= 1
  Activation activation = Activation::Tanh;
  Activation output_activation = Activation::Tanh;
  WeightMode weight_mode = WeightMode::Shared;

  // Throws std::invalid_argument when any count < 1.
  void validate() const;

  int n_units() const { return n_outputs + n_hidden_layers * hidden_width + n_visible; }

  // Fan-in (excluding bias and recurrence) of hidden layer l, 1-based bottom-up.
  int hidden_fan_in(int layer) const { return layer == 1 ? n_visible : hidden_width; }

  // Weight-row widths, bias included.
  int output_row_width() const { return 1 + hidden_width; }
  int hidden_row_width(int layer) const { return 1 + hidden_fan_in(layer) + hidden_width; }
  int visible_row_width() const { return 1 + n_inputs; }

  // Scalar counts of the three sections of one full bank.
  long output_section_size() const;
  long hidden_section_size() const;
  long visible_section_size() const;

  // One full bank: output + hidden + visible sections.
  long bank_weight_count() const;

  // Number of stored banks: B in per-instant mode, 1 in shared mode.
  int n_banks() const;

  // Every weight scalar across all banks. Past banks carry only the
  // visible+hidden sections, so this is N_W + (B-1)(hidden+visible)
  // in per-instant mode and N_W in shared mode.
  long total_weight_count() const;

  bool operator==(const NetworkConfig&) const = default;
};

struct SectionCounts {
  long output = 0;      // N_O(1+N_H)
  long hidden = 0;      // N_H(1+N_V+N_H) + (N_L-1) N_H(1+2N_H)
  long visible = 0;     // N_V(1+N_I)
  long past_banks = 0;  // (B-1)(hidden+visible) in per-instant mode, else 0
  long total = 0;
};

SectionCounts weight_counts(const NetworkConfig& config);

// Index arithmetic for the joint state-and-parameter vector.
//
// Layout, 0-based:
//   [0, (B+1)*N_U)                unit outputs, instant-major: current instant
//                                 first, then -1..-B. Within an instant:
//                                 output units, hidden layers bottom-up
//                                 (layer 1 first), visible units.
//   [(B+1)*N_U, ...)              weights: current bank as [output section,
//                                 hidden layers bottom-up, visible section],
//                                 then past banks (per-instant mode only,
//                                 ages 1..B-1) each as [hidden, visible].
// Within a weight section rows are unit-major; within a row the order is
// [bias, forward inputs..., recurrent inputs...].
//
// The map is invertible; label() renders an index as a readable name for
// CSV dumps and diagnostics.
class JointLayout {
 public:
  explicit JointLayout(const NetworkConfig& config);

  long size() const { return size_; }
  long n_output_elements() const { return n_instants_ * config_.n_units(); }
  long n_weight_elements() const { return config_.total_weight_count(); }
  long weights_base() const { return n_output_elements(); }
  int n_instants() const { return n_instants_; }

  // Unit-output indices; age is 0 (current) .. B.
  long output_unit_index(int age, int unit) const;            // output layer
  long hidden_unit_index(int age, int layer, int unit) const; // layer 1-based
  long visible_unit_index(int age, int unit) const;
  long instant_base(int age) const;

  // Weight indices; age is always 0 for the output section, 0..n_banks-1
  // otherwise. slot 0 is the bias; forward inputs then recurrent follow.
  long output_weight_index(int unit, int slot) const;
  long hidden_weight_index(int age, int layer, int unit, int slot) const;
  long visible_weight_index(int age, int unit, int slot) const;
  long bank_base(int age) const;

  std::string label(long index) const;

  const NetworkConfig& config() const { return config_; }

 private:
  NetworkConfig config_;
  int n_instants_ = 0;
  long size_ = 0;
};

}  // namespace drnn
