#pragma once

#include <Eigen/Core>
#include <string>
#include <unordered_map>
#include <vector>

namespace sparsepde {

// Library of all monomials of total degree <= degree over input_dim
// variables, in graded-lexicographic order: degree ascending, and within a
// degree, exponent tuples descending lexicographically (x_1 before x_2).
// Feature 0 is the constant 1; the map is stable across runs for a given
// (input_dim, degree), so checkpoints and exported policies agree on indices.
class DictionarySpec {
 public:
  DictionarySpec(int input_dim, int degree, std::vector<std::string> variable_names = {});

  int input_dim() const { return input_dim_; }
  int degree() const { return degree_; }
  int feature_count() const { return static_cast<int>(exponents_.size()); }
  const std::vector<std::string>& variable_names() const { return variable_names_; }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }

  // Index of the monomial with the given label, or -1 when unknown.
  int find_label(const std::string& label) const;

 private:
  int input_dim_;
  int degree_;
  std::vector<std::string> variable_names_;
  std::vector<std::vector<int>> exponents_;
  std::unordered_map<std::string, int> label_index_;
};

long long binomial(int n, int k);

// C(input_dim + degree, degree)
int polynomial_feature_count(int input_dim, int degree);

// Variable names for an agent state [m_1..m_n, params...].
std::vector<std::string> state_variable_names(int n_sensors,
                                              const std::vector<std::string>& param_names);

Eigen::VectorXd evaluate_features(const DictionarySpec& spec, const Eigen::VectorXd& s);

// states and features are column-per-sample.
Eigen::MatrixXd evaluate_features_batch(const DictionarySpec& spec, const Eigen::MatrixXd& states);

std::string monomial_label(const DictionarySpec& spec, int index);

}  // namespace sparsepde
