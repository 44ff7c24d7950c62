#ifndef RAAG_RAAG_HPP_
#define RAAG_RAAG_HPP_

#include "dag.hpp"
#include "element.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "harness.hpp"
#include "normal_form.hpp"
#include "quasiroot.hpp"
#include "rational.hpp"
#include "seqwords.hpp"
#include "structure.hpp"
#include "word.hpp"

#endif  // RAAG_RAAG_HPP_
