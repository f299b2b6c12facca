#ifndef NCG_TRIPLE_IO_HPP
#define NCG_TRIPLE_IO_HPP

#include <string>

#include "ncg/triple.hpp"

namespace ncg {

// Triple file schema: {hilbert_dim, algebra_summands, rep_basis,
// dirac|null, grading|null, real: {unitary, epsilon, epsilon_prime,
// epsilon_double_prime|null}|null, tol?}. Matrices are arrays of rows,
// entries are [re, im] pairs.
FiniteTriple load_triple(const std::string& path);
FiniteTriple parse_triple(const std::string& json_text);
std::string triple_to_json(const FiniteTriple& t);

// Built-in example triples.
FiniteTriple make_two_point_triple(Complex t_param, int ko);  // F_X; KO in {0,2,6}
FiniteTriple make_electrodynamics_triple(Complex d);          // F_ED

}  // namespace ncg

#endif
