#include "sparsepde/dictionary.hpp"

#include <functional>

#include "sparsepde/errors.hpp"

namespace sparsepde {

namespace {

// Exponent tuples of total degree exactly `deg`, lexicographically
// descending: position 0 takes the largest exponent first.
void enumerate_degree(int n, int deg, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  const int pos = static_cast<int>(current.size());
  if (pos == n - 1) {
    current.push_back(deg);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = deg; e >= 0; --e) {
    current.push_back(e);
    enumerate_degree(n, deg - e, current, out);
    current.pop_back();
  }
}

}  // namespace

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

int polynomial_feature_count(int input_dim, int degree) {
  return static_cast<int>(binomial(input_dim + degree, degree));
}

std::vector<std::string> state_variable_names(int n_sensors,
                                              const std::vector<std::string>& param_names) {
  std::vector<std::string> names;
  names.reserve(n_sensors + param_names.size());
  for (int i = 0; i < n_sensors; ++i) names.push_back("m_" + std::to_string(i + 1));
  names.insert(names.end(), param_names.begin(), param_names.end());
  return names;
}

DictionarySpec::DictionarySpec(int input_dim, int degree, std::vector<std::string> variable_names)
    : input_dim_(input_dim), degree_(degree), variable_names_(std::move(variable_names)) {
  if (input_dim < 1) throw ConfigError("dictionary input_dim must be >= 1");
  if (degree < 0) throw ConfigError("dictionary degree must be >= 0");
  if (variable_names_.empty()) {
    for (int i = 0; i < input_dim; ++i) variable_names_.push_back("x_" + std::to_string(i + 1));
  }
  if (static_cast<int>(variable_names_.size()) != input_dim) {
    throw ConfigError("dictionary variable_names size does not match input_dim");
  }
  std::vector<int> current;
  for (int deg = 0; deg <= degree; ++deg) {
    enumerate_degree(input_dim, deg, current, exponents_);
  }
  for (int i = 0; i < feature_count(); ++i) {
    label_index_.emplace(monomial_label(*this, i), i);
  }
}

int DictionarySpec::find_label(const std::string& label) const {
  auto it = label_index_.find(label);
  return it == label_index_.end() ? -1 : it->second;
}

Eigen::VectorXd evaluate_features(const DictionarySpec& spec, const Eigen::VectorXd& s) {
  if (s.size() != spec.input_dim()) {
    throw ConfigError("evaluate_features: state dimension does not match dictionary");
  }
  const int n = spec.input_dim();
  const int d = spec.degree();
  // powers(i, e) = s_i^e
  Eigen::MatrixXd powers(n, d + 1);
  powers.col(0).setOnes();
  for (int e = 1; e <= d; ++e) powers.col(e) = powers.col(e - 1).cwiseProduct(s);

  Eigen::VectorXd features(spec.feature_count());
  const auto& exps = spec.exponents();
  for (int f = 0; f < spec.feature_count(); ++f) {
    double v = 1.0;
    for (int i = 0; i < n; ++i) {
      const int e = exps[f][i];
      if (e > 0) v *= powers(i, e);
    }
    features[f] = v;
  }
  return features;
}

Eigen::MatrixXd evaluate_features_batch(const DictionarySpec& spec, const Eigen::MatrixXd& states) {
  Eigen::MatrixXd features(spec.feature_count(), states.cols());
  for (Eigen::Index b = 0; b < states.cols(); ++b) {
    features.col(b) = evaluate_features(spec, states.col(b));
  }
  return features;
}

std::string monomial_label(const DictionarySpec& spec, int index) {
  if (index < 0 || index >= spec.feature_count()) {
    throw ConfigError("monomial_label: index out of range");
  }
  const auto& exps = spec.exponents()[index];
  std::string label;
  for (int i = 0; i < spec.input_dim(); ++i) {
    if (exps[i] == 0) continue;
    if (!label.empty()) label += ' ';
    label += spec.variable_names()[i];
    if (exps[i] > 1) label += '^' + std::to_string(exps[i]);
  }
  return label.empty() ? "1" : label;
}

}  // namespace sparsepde
