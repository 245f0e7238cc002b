"""
Модуль для пагинации ответа
"""

from typing import Any

from fastapi.encoders import jsonable_encoder
from pydantic import BaseModel

__all__ = ("DefaultPaginator",)


class DefaultPaginator:
    """Страницы нумеруются с 1, count это полная длина списка

    Пример:

        DefaultPaginator.json(2, 2, [1, 2, 3])
        >>> {"page": 2, "size": 2, "count": 3, "items": [3]}
    """

    class Schema(BaseModel):
        page: int
        size: int
        count: int
        items: list

    @staticmethod
    def json(page: int, size: int, response: list[Any]) -> dict:
        start = (page - 1) * size
        return DefaultPaginator.Schema(
            page=page,
            size=size,
            count=len(response),
            items=jsonable_encoder(response[start : start + size]),
        ).model_dump()
