#ifndef TRUNCSYM_TRUNCSYM_HPP
#define TRUNCSYM_TRUNCSYM_HPP

#include "truncsym/field.hpp"
#include "truncsym/ideal.hpp"
#include "truncsym/io.hpp"
#include "truncsym/linalg.hpp"
#include "truncsym/msym.hpp"
#include "truncsym/partition.hpp"

#endif  // TRUNCSYM_TRUNCSYM_HPP
