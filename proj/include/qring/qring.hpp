#pragma once

#include "error.hpp"
#include "scalar.hpp"
#include "permutation.hpp"
#include "quandle.hpp"
#include "cocycle.hpp"
#include "constructions.hpp"
#include "structure.hpp"
#include "covering.hpp"
#include "ring_element.hpp"
#include "linear.hpp"
#include "ring_ops.hpp"
#include "free_group.hpp"
#include "free_quandle.hpp"
#include "search.hpp"
#include "families.hpp"
#include "fq_search.hpp"
#include "scan.hpp"
#include "io.hpp"
