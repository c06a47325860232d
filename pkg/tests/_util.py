from rankcrit._primality import is_prime


def primes_leq(hi: int) -> list[int]:
    return [n for n in range(2, hi + 1) if is_prime(n)]
