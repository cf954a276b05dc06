from ..core.stack_exception import StackException


"""
Hyperparameters of a random forest: p trees, q minimum
observations per leaf, r features drawn per split
"""
class ForestParams:
    def __init__(self, p: int = 100, q: int = 1, r: int = None, seed: int = 0, bootstrap: bool = True):
        self.p: int = int(p)
        self.q: int = int(q)
        self.r: int = None if r is None else int(r)
        self.seed: int = int(seed)
        self.bootstrap: bool = bool(bootstrap)

        if self.p < 1:
            raise StackException("Forest needs at least one tree (p >= 1)")
        if self.q < 1:
            raise StackException("Minimum leaf size q must be >= 1")
        if self.r is not None and self.r < 1:
            raise StackException("Features per split r must be >= 1")


    def __eq__(self, other) -> bool:
        return isinstance(other, ForestParams) and self.as_dict() == other.as_dict()


    def __repr__(self) -> str:
        return "ForestParams(p={0}, q={1}, r={2}, seed={3}, bootstrap={4})".format(self.p, self.q, self.r, self.seed, self.bootstrap)


    # r defaults to a third of the inputs, floored
    # and kept at one or more
    def features_per_split(self, n: int) -> int:
        r: int = max(1, n // 3) if self.r is None else self.r

        if r > n:
            raise StackException("Features per split r={0} exceeds the {1} available inputs".format(r, n))

        return r


    def replace(self, **changes) -> "ForestParams":
        values: dict = self.as_dict()
        values.update(changes)
        return ForestParams(**values)


    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "r": self.r, "seed": self.seed, "bootstrap": self.bootstrap}
