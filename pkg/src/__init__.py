"""
kcover-toolkit - малые ℓ-рёберные покрытия и k-связные подграфы

Точные решатели покрытий, алгоритм покрытие-затем-дополнение
для k-связных остовных подграфов и точная рациональная проверка
масштабирования многогранников.
"""

__version__ = "0.1.0"
